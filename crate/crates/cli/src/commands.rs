use std::str::FromStr;

use clap::{Args, Subcommand};
use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

use splitquot::bwb::{bwb_indices, bwb_mixed, bwb_quot_dual, dual_sequence, mixed_sequence};
use splitquot::hankel::{
    fitting_generators, hankel, secant_point, seed_from_env, splitting_from_point, HankelPoint,
    PointSampler,
};
use splitquot::partitions::{
    cauchy_wedge, lr_coefficient, schur_complex_terms, schur_of_double, tensor_schur, Partition,
};
use splitquot::quot::{
    degree_lower_bound, koszul_summands, taut_rank, v_cohomology_terms, verify_vanishing,
    QuotEmbedding,
};
use splitquot::splitting::{
    admissible_sets, admits_subsheaf, dominates, dominates_via_flag, dominates_via_h1, eb, ext1,
    flag_stratum_dim, gap, gp_type, h0, h1, hn_data, hom, is_admissible, stratum_codim,
    tangent_check, u, FlagChain, SplittingType,
};

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] splitquot::Error),
    #[error("{0}")]
    Usage(String),
}

type CliResult<T> = Result<T, CliError>;

/// What a subcommand produced: the JSON outputs, an optional one-line answer for
/// `--plain`, and any counterexamples found (a nonempty list makes the exit code 1).
pub struct Outcome {
    pub outputs: Value,
    pub plain: Option<String>,
    pub counterexamples: Vec<Value>,
}

impl Outcome {
    fn new(outputs: Value) -> Self {
        Outcome {
            outputs,
            plain: None,
            counterexamples: Vec::new(),
        }
    }

    fn plain(mut self, s: impl ToString) -> Self {
        self.plain = Some(s.to_string());
        self
    }

    fn counterexamples(mut self, c: Vec<Value>) -> Self {
        self.counterexamples = c;
        self
    }
}

/// Library operation -> subcommand exposing it.
pub const OPERATIONS: &[(&str, &str)] = &[
    ("admissible_sets", "admissible"),
    ("admits_subsheaf", "gap"),
    ("bwb_indices", "bwb"),
    ("bwb_mixed", "bwb"),
    ("bwb_quot_dual", "bwb"),
    ("cauchy_wedge", "cauchy"),
    ("conjugate", "conjugate"),
    ("degree_lower_bound", "vcoh"),
    ("dominates", "dominance"),
    ("dominates_via_flag", "dominance"),
    ("dominates_via_h1", "dominance"),
    ("eb", "eb"),
    ("ext1", "hom"),
    ("fitting_generators", "fitting"),
    ("flag_stratum_dim", "fiber-dim"),
    ("gap", "gap"),
    ("gp_type", "gp-type"),
    ("h0", "cohomology"),
    ("h1", "cohomology"),
    ("hankel", "hankel"),
    ("hn_data", "hn"),
    ("hom", "hom"),
    ("is_admissible", "admissible"),
    ("is_balanced", "tame"),
    ("is_perfectly_balanced", "tame"),
    ("is_tame", "tame"),
    ("koszul_summands", "koszul"),
    ("lr_coefficient", "lr"),
    ("schur_complex_terms", "schur-complex"),
    ("schur_of_double", "schur-double"),
    ("secant_point", "splitting-from-point"),
    ("splitting_from_point", "splitting-from-point"),
    ("stratum_codim", "stratum-dim"),
    ("stromme_embedding", "embedding"),
    ("tangent_check", "tangent"),
    ("taut_rank", "embedding"),
    ("tensor_schur", "tensor"),
    ("u", "u"),
    ("v_cohomology", "vcoh"),
    ("verify_vanishing", "verify-vanishing"),
];

#[derive(Subcommand, Serialize, Debug)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// Dominance of two splitting types, by all three oracles.
    Dominance(DominanceArgs),
    /// u(e) = h^1(End O(e)), the expected codimension of the splitting locus.
    U(TypeArg),
    /// h^0 and h^1 of O(e)(m).
    Cohomology(CohomologyArgs),
    /// hom and ext^1 between O(a) and O(b).
    Hom(PairArgs),
    /// Balanced, perfectly balanced and tame predicates.
    Tame(TypeArg),
    /// Harder-Narasimhan flag data.
    Hn(TypeArg),
    /// Admissible index sets of the HN flag, optionally checking one set.
    Admissible(AdmissibleArgs),
    /// Whether O(e) admits an O(a)-subsheaf, and the gap when it does.
    Gap(GapArgs),
    /// The dominance-maximal type of rank r, degree d admitting an O(a)-subsheaf.
    Eb(EbArgs),
    /// Codimension of the stratum X_{a,e} in the relative Quot scheme.
    StratumDim(StratumArgs),
    /// Dimension of a flag stratum, chain given as `t1;t2;...`.
    FiberDim(FiberArgs),
    /// Both sides of the tangent-space identity.
    Tangent(TangentArgs),
    /// The splitting type of pushforwards of W^r_d line bundles on a general cover.
    GpType(GpArgs),
    /// Borel-Weil-Bott degree on Gr(k, n) for S_mu A (x) S_alpha B^* or S_nu B^*.
    Bwb(BwbArgs),
    /// Grassmannian embedding data of the Quot scheme and the tautological rank.
    Embedding(EmbeddingQuery),
    /// Koszul summands Lambda^k(A1 (x) (B2 (+) B2)^*).
    Koszul(KoszulArgs),
    /// Cohomology of V_{mu,alpha,beta} on Gr(k1,n1) x Gr(k2,n2).
    Vcoh(VcohArgs),
    /// Exhaustive check of the tautological vanishing bound.
    VerifyVanishing(VerifyArgs),
    /// Symbolic Hankel matrix B_{k,d-k}, optionally evaluated at a point.
    Hankel(HankelArgs),
    /// Fitting ideal generators of the locus of types at most (d-e, e).
    Fitting(FittingArgs),
    /// Splitting type of the extension with a given class.
    SplittingFromPoint(PointArgs),
    /// Conjugate partition.
    Conjugate(LamArg),
    /// Littlewood-Richardson coefficient c^nu_{lam,mu}.
    Lr(LrArgs),
    /// S_lam (x) S_mu on a space of the given rank.
    Tensor(TensorArgs),
    /// S_lam(V (+) W) as a sum of S_g1 V (x) S_g2 W.
    SchurDouble(SchurDoubleArgs),
    /// Lambda^n(E (x) F) by the Cauchy formula.
    Cauchy(CauchyArgs),
    /// Terms of degree t in the Schur complex of S_lam.
    SchurComplex(SchurComplexArgs),
    /// Table of library operations and the subcommands exposing them.
    Ops(NoArgs),
}

#[derive(Args, Serialize, Debug)]
pub struct NoArgs {}

#[derive(Args, Serialize, Debug)]
pub struct TypeArg {
    /// Splitting type, comma-separated and weakly increasing.
    #[arg(long, allow_hyphen_values = true)]
    e: SplittingType,
}

#[derive(Args, Serialize, Debug)]
pub struct DominanceArgs {
    #[arg(long, allow_hyphen_values = true)]
    e: SplittingType,
    #[arg(long, allow_hyphen_values = true)]
    f: SplittingType,
}

#[derive(Args, Serialize, Debug)]
pub struct CohomologyArgs {
    #[arg(long, allow_hyphen_values = true)]
    e: SplittingType,
    /// Twist.
    #[arg(long, allow_hyphen_values = true, default_value_t = 0)]
    m: i64,
}

#[derive(Args, Serialize, Debug)]
pub struct PairArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: SplittingType,
    #[arg(long, allow_hyphen_values = true)]
    b: SplittingType,
}

#[derive(Args, Serialize, Debug)]
pub struct AdmissibleArgs {
    #[arg(long, allow_hyphen_values = true)]
    e: SplittingType,
    /// Index set to test, comma-separated 1-based flag indices.
    #[arg(long)]
    set: Option<IndexSet>,
}

#[derive(Args, Serialize, Debug)]
pub struct GapArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: SplittingType,
    #[arg(long, allow_hyphen_values = true)]
    e: SplittingType,
}

#[derive(Args, Serialize, Debug)]
pub struct EbArgs {
    #[arg(long)]
    r: usize,
    #[arg(long, allow_hyphen_values = true)]
    d: i64,
    /// Subsheaf type; pass "" for the zero subsheaf.
    #[arg(long, allow_hyphen_values = true)]
    a: SplittingType,
}

#[derive(Args, Serialize, Debug)]
pub struct StratumArgs {
    #[arg(long, allow_hyphen_values = true)]
    a: SplittingType,
    #[arg(long, allow_hyphen_values = true)]
    e: SplittingType,
    #[arg(long, allow_hyphen_values = true)]
    c: i64,
    /// Defaults to r(c+1) - d.
    #[arg(long, allow_hyphen_values = true)]
    rank_f: Option<i64>,
    /// Defaults to rc - d.
    #[arg(long, allow_hyphen_values = true)]
    rank_g: Option<i64>,
}

#[derive(Args, Serialize, Debug)]
pub struct FiberArgs {
    /// Semicolon-separated splitting types of strictly increasing rank, e.g. `1;-1,2;-2,-1,3`.
    #[arg(long, allow_hyphen_values = true)]
    chain: String,
}

#[derive(Args, Serialize, Debug)]
pub struct TangentArgs {
    #[arg(long, allow_hyphen_values = true)]
    e: SplittingType,
    #[arg(long)]
    set: IndexSet,
    /// The specialization e' <= e.
    #[arg(long, allow_hyphen_values = true)]
    f: SplittingType,
}

#[derive(Args, Serialize, Debug)]
pub struct GpArgs {
    #[arg(long)]
    g: i64,
    #[arg(long, allow_hyphen_values = true)]
    d: i64,
    #[arg(long)]
    r: i64,
    #[arg(long)]
    k: i64,
}

#[derive(Args, Serialize, Debug)]
pub struct BwbArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "")]
    mu: Partition,
    #[arg(long, default_value = "")]
    alpha: Partition,
    /// Compute S_nu B^* instead of S_mu A (x) S_alpha B^*.
    #[arg(long, conflicts_with_all = ["mu", "alpha"])]
    nu: Option<Partition>,
}

#[derive(Args, Serialize, Debug, Clone, Copy)]
pub struct EmbeddingArgs {
    #[arg(long, allow_hyphen_values = true)]
    r: i64,
    #[arg(long, allow_hyphen_values = true)]
    d: i64,
    /// Number of sections: the ambient bundle is O^N.
    #[arg(long = "N", allow_hyphen_values = true)]
    #[serde(rename = "N")]
    n_sections: i64,
    #[arg(long, allow_hyphen_values = true)]
    m: i64,
}

impl EmbeddingArgs {
    fn build(&self) -> CliResult<QuotEmbedding> {
        Ok(QuotEmbedding::new(self.r, self.d, self.n_sections, self.m)?)
    }
}

#[derive(Args, Serialize, Debug)]
pub struct EmbeddingQuery {
    #[arg(long, allow_hyphen_values = true)]
    r: i64,
    #[arg(long, allow_hyphen_values = true)]
    d: i64,
    #[arg(long = "N", allow_hyphen_values = true)]
    #[serde(rename = "N")]
    n_sections: i64,
    /// Twist; when omitted, the least m >= d whose Koszul length exceeds D is used.
    #[arg(long, allow_hyphen_values = true, required_unless_present = "total")]
    m: Option<i64>,
    #[arg(long = "D", conflicts_with = "m")]
    #[serde(rename = "D")]
    total: Option<u32>,
}

#[derive(Args, Serialize, Debug)]
pub struct KoszulArgs {
    #[command(flatten)]
    #[serde(flatten)]
    emb: EmbeddingArgs,
    #[arg(long)]
    k: u32,
}

#[derive(Args, Serialize, Debug)]
pub struct VcohArgs {
    #[command(flatten)]
    #[serde(flatten)]
    emb: EmbeddingArgs,
    #[arg(long)]
    mu: Partition,
    #[arg(long, default_value = "")]
    alpha: Partition,
    #[arg(long, default_value = "")]
    beta: Partition,
}

#[derive(Args, Serialize, Debug)]
pub struct VerifyArgs {
    #[command(flatten)]
    #[serde(flatten)]
    emb: EmbeddingArgs,
    /// Degree of the tautological bundle power.
    #[arg(long = "D")]
    #[serde(rename = "D")]
    total: u32,
    /// Largest |mu| examined.
    #[arg(long)]
    mu_cap: u32,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    #[serde(skip)]
    jobs: usize,
}

#[derive(Args, Serialize, Debug)]
pub struct HankelArgs {
    #[arg(long)]
    k: usize,
    #[arg(long)]
    d: usize,
    /// Rational coordinates a_0,...,a_{d-2}.
    #[arg(long, allow_hyphen_values = true)]
    point: Option<String>,
}

#[derive(Args, Serialize, Debug)]
pub struct FittingArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    e: usize,
}

#[derive(Args, Serialize, Debug)]
pub struct PointArgs {
    /// Rational coordinates a_0,...,a_{d-2}.
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["nodes", "random"])]
    point: Option<String>,
    #[arg(long, required_unless_present = "point")]
    d: Option<usize>,
    /// Secant nodes t_1,...,t_s (distinct rationals).
    #[arg(long, allow_hyphen_values = true, requires = "weights")]
    nodes: Option<String>,
    /// Secant weights w_1,...,w_s (nonzero rationals).
    #[arg(long, allow_hyphen_values = true, requires = "nodes")]
    weights: Option<String>,
    /// Sample a seeded random point (seed from SPLITQUOT_SEED).
    #[arg(long, conflicts_with = "nodes")]
    random: bool,
    /// With --random, sample on the s-secant instead of a generic point.
    #[arg(long, requires = "random")]
    s: Option<usize>,
}

#[derive(Args, Serialize, Debug)]
pub struct LamArg {
    #[arg(long)]
    lam: Partition,
}

#[derive(Args, Serialize, Debug)]
pub struct LrArgs {
    #[arg(long)]
    lam: Partition,
    #[arg(long)]
    mu: Partition,
    #[arg(long)]
    nu: Partition,
}

#[derive(Args, Serialize, Debug)]
pub struct TensorArgs {
    #[arg(long)]
    lam: Partition,
    #[arg(long)]
    mu: Partition,
    /// Rank of the underlying space.
    #[arg(long)]
    rank: usize,
}

#[derive(Args, Serialize, Debug)]
pub struct SchurDoubleArgs {
    #[arg(long)]
    lam: Partition,
    #[arg(long)]
    rank: usize,
}

#[derive(Args, Serialize, Debug)]
pub struct CauchyArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    rank_e: usize,
    #[arg(long)]
    rank_f: usize,
}

#[derive(Args, Serialize, Debug)]
pub struct SchurComplexArgs {
    #[arg(long)]
    lam: Partition,
    #[arg(long)]
    t: u32,
}

/// Strictly increasing 1-based flag indices, e.g. `1,2`.
#[derive(Clone, Debug, Serialize)]
#[serde(transparent)]
pub struct IndexSet(Vec<usize>);

impl FromStr for IndexSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let list = splitquot::parse_int_list(s).map_err(|e| e.to_string())?;
        let set: Vec<usize> = list
            .iter()
            .map(|&i| usize::try_from(i).map_err(|_| format!("index {i} is negative")))
            .collect::<Result<_, _>>()?;
        if set.windows(2).any(|w| w[0] >= w[1]) {
            return Err(format!("index set {set:?} must be strictly increasing"));
        }
        Ok(IndexSet(set))
    }
}

fn parse_rationals(s: &str) -> CliResult<Vec<BigRational>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|t| {
            let t = t.trim();
            t.parse::<BigRational>()
                .or_else(|_| t.parse::<BigInt>().map(BigRational::from_integer))
                .map_err(|_| CliError::Usage(format!("{t:?} is not a rational number")))
        })
        .collect()
}

fn to_json<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("value serializes")
}

fn point_report(pt: &HankelPoint) -> Value {
    let split = splitting_from_point(pt);
    let ranks: Vec<usize> = (1..pt.d).map(|k| pt.hankel_rank(k)).collect();
    json!({ "point": pt, "splitting": split, "hankel_ranks": ranks })
}

impl Command {
    /// Subcommand name and echo of its arguments.
    pub fn describe(&self) -> (String, Value) {
        match to_json(self) {
            Value::Object(map) => map.into_iter().next().expect("one variant"),
            other => (other.as_str().unwrap_or_default().to_string(), json!({})),
        }
    }

    pub fn run(&self) -> CliResult<Outcome> {
        match self {
            Command::Dominance(a) => {
                let partial = dominates(&a.e, &a.f)?;
                let via_h1 = dominates_via_h1(&a.e, &a.f)?;
                let via_flag = dominates_via_flag(&a.e, &a.f)?;
                let oracles = json!({ "partial_sums": partial, "h1_window": via_h1, "flag": via_flag });
                let disagree = if partial == via_h1 && via_h1 == via_flag {
                    Vec::new()
                } else {
                    vec![oracles.clone()]
                };
                Ok(Outcome::new(json!({ "dominates": partial, "oracles": oracles }))
                    .plain(partial)
                    .counterexamples(disagree))
            }
            Command::U(a) => {
                let v = u(&a.e);
                Ok(Outcome::new(json!({ "u": v })).plain(v))
            }
            Command::Cohomology(a) => Ok(Outcome::new(json!({
                "h0": h0(&a.e, a.m),
                "h1": h1(&a.e, a.m),
            }))),
            Command::Hom(a) => Ok(Outcome::new(json!({
                "hom": hom(&a.a, &a.b),
                "ext1": ext1(&a.a, &a.b),
            }))),
            Command::Tame(a) => {
                let tame = a.e.is_tame();
                Ok(Outcome::new(json!({
                    "balanced": a.e.is_balanced(),
                    "perfectly_balanced": a.e.is_perfectly_balanced(),
                    "tame": tame,
                }))
                .plain(tame))
            }
            Command::Hn(a) => Ok(Outcome::new(to_json(&hn_data(&a.e)))),
            Command::Admissible(a) => {
                let sets = admissible_sets(&a.e);
                let mut out = json!({ "admissible_sets": sets });
                if let Some(set) = &a.set {
                    out["is_admissible"] = json!(is_admissible(&a.e, &set.0));
                }
                Ok(Outcome::new(out))
            }
            Command::Gap(a) => {
                let admits = admits_subsheaf(&a.a, &a.e)?;
                let g = if admits { Some(gap(&a.a, &a.e)?) } else { None };
                Ok(Outcome::new(json!({ "admits": admits, "gap": g })))
            }
            Command::Eb(a) => {
                let top = eb(a.r, a.d, &a.a)?;
                Ok(Outcome::new(json!({ "eb": top })).plain(&top))
            }
            Command::StratumDim(a) => {
                let codim = stratum_codim(&a.a, &a.e, a.c, a.rank_f, a.rank_g)?;
                Ok(Outcome::new(json!({ "codim": codim })).plain(codim))
            }
            Command::FiberDim(a) => {
                let types = a
                    .chain
                    .split(';')
                    .map(str::parse::<SplittingType>)
                    .collect::<Result<Vec<_>, _>>()?;
                let chain = FlagChain::new(types)?;
                let dim = flag_stratum_dim(&chain);
                Ok(Outcome::new(json!({ "dim": dim })).plain(dim))
            }
            Command::Tangent(a) => {
                let (lhs, rhs) = tangent_check(&a.e, &a.set.0, &a.f)?;
                let bad = if lhs == rhs {
                    Vec::new()
                } else {
                    vec![json!({ "lhs": lhs, "rhs": rhs })]
                };
                Ok(Outcome::new(json!({ "lhs": lhs, "rhs": rhs, "equal": lhs == rhs }))
                    .plain(lhs == rhs)
                    .counterexamples(bad))
            }
            Command::GpType(a) => {
                let t = gp_type(a.g, a.d, a.r, a.k)?;
                Ok(Outcome::new(json!({ "type": t })).plain(&t))
            }
            Command::Bwb(a) => run_bwb(a),
            Command::Embedding(a) => {
                let emb = match (a.m, a.total) {
                    (Some(m), _) => QuotEmbedding::new(a.r, a.d, a.n_sections, m)?,
                    (None, Some(total)) => {
                        QuotEmbedding::minimal_for(a.r, a.d, a.n_sections, total)?
                    }
                    (None, None) => return Err(CliError::Usage("need --m or --D".into())),
                };
                Ok(Outcome::new(json!({
                    "embedding": emb,
                    "dimension": emb.dimension(),
                    "koszul_length": emb.koszul_length(),
                    "ranks": {
                        "A1": emb.rank_a1(), "B1": emb.rank_b1(),
                        "A2": emb.rank_a2(), "B2": emb.rank_b2(),
                    },
                    "taut_rank": taut_rank(emb.r, emb.d, emb.m)?,
                })))
            }
            Command::Koszul(a) => {
                let emb = a.emb.build()?;
                Ok(Outcome::new(json!({ "summands": koszul_summands(&emb, a.k) })))
            }
            Command::Vcoh(a) => run_vcoh(a),
            Command::VerifyVanishing(a) => {
                let emb = a.emb.build()?;
                if a.jobs == 0 {
                    return Err(CliError::Usage("--jobs must be at least 1".into()));
                }
                let report = verify_vanishing(&emb, a.total, a.mu_cap, a.jobs)?;
                let bad = report.counterexamples.iter().map(to_json).collect();
                let plain = format!(
                    "{} counterexamples, {} sharpness witnesses",
                    report.counterexamples.len(),
                    report.sharpness_witnesses.len()
                );
                Ok(Outcome::new(to_json(&report)).plain(plain).counterexamples(bad))
            }
            Command::Hankel(a) => {
                let h = hankel(a.k, a.d)?;
                let mut out = json!({ "rows": h.rows(), "cols": h.cols(), "symbolic": h.symbolic() });
                if let Some(p) = &a.point {
                    let pt = HankelPoint::new(a.d, parse_rationals(p)?)?;
                    let values: Vec<Vec<String>> = h
                        .evaluate(pt.coords())
                        .iter()
                        .map(|row| row.iter().map(ToString::to_string).collect())
                        .collect();
                    out["evaluated"] = json!(values);
                    out["rank"] = json!(pt.hankel_rank(a.k));
                }
                Ok(Outcome::new(out))
            }
            Command::Fitting(a) => {
                let gens: Vec<String> = fitting_generators(a.d, a.e)?
                    .iter()
                    .map(ToString::to_string)
                    .collect();
                let plain = gens.join("\n");
                Ok(Outcome::new(json!({ "count": gens.len(), "generators": gens })).plain(plain))
            }
            Command::SplittingFromPoint(a) => run_point(a),
            Command::Conjugate(a) => {
                let c = a.lam.conjugate();
                Ok(Outcome::new(json!({ "conjugate": c })).plain(&c))
            }
            Command::Lr(a) => {
                let c = lr_coefficient(&a.lam, &a.mu, &a.nu);
                Ok(Outcome::new(json!({ "coefficient": c })).plain(c))
            }
            Command::Tensor(a) => Ok(Outcome::new(json!({
                "terms": tensor_schur(&a.lam, &a.mu, a.rank),
            }))),
            Command::SchurDouble(a) => Ok(Outcome::new(json!({
                "terms": schur_of_double(&a.lam, a.rank),
            }))),
            Command::Cauchy(a) => Ok(Outcome::new(json!({
                "terms": cauchy_wedge(a.n, a.rank_e, a.rank_f),
            }))),
            Command::SchurComplex(a) => Ok(Outcome::new(json!({
                "terms": schur_complex_terms(&a.lam, a.t),
            }))),
            Command::Ops(_) => {
                let table: serde_json::Map<String, Value> = OPERATIONS
                    .iter()
                    .map(|(op, cmd)| (op.to_string(), json!(cmd)))
                    .collect();
                Ok(Outcome::new(Value::Object(table)))
            }
        }
    }
}

fn run_bwb(a: &BwbArgs) -> CliResult<Outcome> {
    if let Some(nu) = &a.nu {
        let (out, j) = bwb_quot_dual(a.k, a.n, nu)?;
        let expected = j.map(|j| j * a.k);
        let bad = match (out.degree(), expected) {
            (Some(deg), Some(jk)) if deg != jk => vec![json!({ "degree": deg, "jk": jk })],
            _ => Vec::new(),
        };
        let sequence = if a.n > a.k { dual_sequence(a.k, a.n, nu) } else { Vec::new() };
        return Ok(Outcome::new(json!({
            "sequence": sequence,
            "outcome": out,
            "degree": out.degree(),
            "j": j,
        }))
        .plain(out.degree().map_or("vanishes".to_string(), |d| d.to_string()))
        .counterexamples(bad));
    }
    let out = bwb_mixed(a.k, a.n, &a.mu, &a.alpha)?;
    let mut outputs = json!({
        "sequence": mixed_sequence(a.k, a.n, &a.mu, &a.alpha),
        "outcome": out,
        "degree": out.degree(),
    });
    let mut bad = Vec::new();
    if let Some(deg) = out.degree() {
        let (idx, d1) = bwb_indices(a.k, a.n, &a.mu, &a.alpha)?;
        if d1 != deg {
            bad.push(json!({ "inversions": deg, "closed_form": d1 }));
        }
        outputs["indices"] = to_json(&idx);
        outputs["closed_form_degree"] = json!(d1);
    }
    Ok(Outcome::new(outputs)
        .plain(out.degree().map_or("vanishes".to_string(), |d| d.to_string()))
        .counterexamples(bad))
}

fn run_vcoh(a: &VcohArgs) -> CliResult<Outcome> {
    let emb = a.emb.build()?;
    let v = v_cohomology_terms(&emb, &a.mu, &a.alpha, &a.beta)?;
    let size = a.mu.size() + a.alpha.size() + a.beta.size();
    let terms: Vec<Value> = v
        .second_factor
        .iter()
        .map(|t| {
            let bound = (!t.nu.is_empty() && !a.mu.is_empty() && a.alpha.len() < emb.rank_b1())
                .then(|| degree_lower_bound(&emb, &a.mu, &a.alpha, &a.beta, &t.nu).ok())
                .flatten();
            let mut term = to_json(t);
            term["lower_bound"] = json!(bound);
            term
        })
        .collect();
    let max = v.report.max_degree();
    Ok(Outcome::new(json!({
        "embedding": emb,
        "first_factor": v.first_factor,
        "second_factor": terms,
        "cohomology": v.report,
        "max_degree": max,
        "size": size,
    }))
    .plain(to_json(&v.report)))
}

fn run_point(a: &PointArgs) -> CliResult<Outcome> {
    let pt = if let Some(p) = &a.point {
        let coords = parse_rationals(p)?;
        let d = coords.len() + 1;
        if let Some(given) = a.d {
            if given != d {
                return Err(CliError::Usage(format!(
                    "--d {given} does not match {} coordinates",
                    coords.len()
                )));
            }
        }
        HankelPoint::new(d, coords)?
    } else {
        let d = a.d.ok_or_else(|| CliError::Usage("need --d".into()))?;
        match (&a.nodes, &a.weights) {
            (Some(n), Some(w)) => secant_point(d, &parse_rationals(n)?, &parse_rationals(w)?)?,
            _ if a.random => {
                let mut sampler = PointSampler::new(seed_from_env());
                match a.s {
                    Some(s) => sampler.secant(d, s, 64)?,
                    None => sampler.point(d)?,
                }
            }
            _ => return Err(CliError::Usage("need --point, --nodes/--weights or --random".into())),
        }
    };
    let out = point_report(&pt);
    let plain = splitting_from_point(&pt);
    Ok(Outcome::new(out).plain(plain))
}
