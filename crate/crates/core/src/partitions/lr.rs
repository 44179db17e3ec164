//! Littlewood-Richardson coefficients by direct enumeration of LR skew tableaux.
//!
//! A skew tableau of shape `outer/inner` is filled row by row from the top, each row
//! right to left, which is exactly the reading order whose word has to be a lattice
//! word. Rows weakly increase left to right and columns strictly increase downwards.

use super::{partitions_of, subpartitions, Multiset, Partition};

struct Filler<'a> {
    outer: &'a Partition,
    inner: &'a Partition,
    /// Fixed content, or `None` to collect every lattice content.
    content: Option<&'a Partition>,
    max_label: usize,
    cells: Vec<(usize, usize)>,
    grid: Vec<Vec<u32>>,
    counts: Vec<u32>,
}

impl<'a> Filler<'a> {
    fn new(
        outer: &'a Partition,
        inner: &'a Partition,
        content: Option<&'a Partition>,
        max_label: usize,
    ) -> Self {
        let mut cells = Vec::new();
        for r in 0..outer.len() {
            for c in (inner.part(r) as usize..outer.part(r) as usize).rev() {
                cells.push((r, c));
            }
        }
        let grid = (0..outer.len())
            .map(|r| vec![0u32; outer.part(r) as usize])
            .collect();
        Filler {
            outer,
            inner,
            content,
            max_label,
            cells,
            grid,
            counts: vec![0; max_label + 1],
        }
    }

    fn label_range(&self, r: usize, c: usize) -> (u32, u32) {
        // strictly below the cell above, if it belongs to the skew shape
        let lo = if r > 0 && c >= self.inner.part(r - 1) as usize {
            self.grid[r - 1][c] + 1
        } else {
            1
        };
        // weakly below the cell to the right, if any
        let mut hi = if c + 1 < self.outer.part(r) as usize {
            self.grid[r][c + 1]
        } else {
            u32::MAX
        };
        // a lattice word can use row r's cells for labels at most r + 1
        hi = hi.min(r as u32 + 1).min(self.max_label as u32);
        (lo, hi)
    }

    fn admissible(&self, v: u32) -> bool {
        let v = v as usize;
        if v > 1 && self.counts[v] + 1 > self.counts[v - 1] {
            return false;
        }
        match self.content {
            Some(mu) => self.counts[v] < mu.part(v - 1),
            None => true,
        }
    }

    fn run(&mut self, idx: usize, visit: &mut dyn FnMut(&[u32])) {
        if idx == self.cells.len() {
            visit(&self.counts[1..]);
            return;
        }
        let (r, c) = self.cells[idx];
        let (lo, hi) = self.label_range(r, c);
        for v in lo..=hi {
            if !self.admissible(v) {
                continue;
            }
            self.grid[r][c] = v;
            self.counts[v as usize] += 1;
            self.run(idx + 1, visit);
            self.counts[v as usize] -= 1;
        }
        self.grid[r][c] = 0;
    }
}

/// `c^nu_{lam,mu}`: the number of LR skew tableaux of shape `nu/lam` with content `mu`.
///
/// Zero unless `lam` is contained in `nu` and `|nu| = |lam| + |mu|`.
pub fn lr_coefficient(lam: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lam.size() + mu.size() || !nu.contains(lam) || !nu.contains(mu) {
        return 0;
    }
    let mut filler = Filler::new(nu, lam, Some(mu), mu.len());
    let mut count = 0u64;
    filler.run(0, &mut |_| count += 1);
    count
}

/// Decomposition of the skew Schur functor `S_{outer/inner}` into `S_gamma` with
/// multiplicity `c^outer_{inner,gamma}`, keeping only `gamma` with at most `max_len` parts.
pub fn skew_decompose(outer: &Partition, inner: &Partition, max_len: usize) -> Multiset<Partition> {
    let mut out = Multiset::new();
    if !outer.contains(inner) {
        return out;
    }
    let labels = max_len.min(outer.len());
    let mut filler = Filler::new(outer, inner, None, labels);
    filler.run(0, &mut |counts| {
        out.insert(Partition::from_decreasing(counts.to_vec()), 1);
    });
    out
}

/// `S_lam (x) S_mu = sum_nu c^nu_{lam,mu} S_nu`, truncated to `nu` with at most `max_len` parts.
pub fn tensor_schur(lam: &Partition, mu: &Partition, max_len: usize) -> Multiset<Partition> {
    let n = lam.size() + mu.size();
    partitions_of(n, max_len, lam.first() + mu.first())
        .into_iter()
        .filter(|nu| nu.contains(lam) && nu.contains(mu))
        .map(|nu| {
            let c = lr_coefficient(lam, mu, &nu);
            (nu, c)
        })
        .collect()
}

/// `S_lam(V (+) W) = sum c^lam_{g1,g2} S_g1 V (x) S_g2 W` with both factors of rank `rank`.
pub fn schur_of_double(lam: &Partition, rank: usize) -> Multiset<(Partition, Partition)> {
    let mut out = Multiset::new();
    for g1 in subpartitions(lam) {
        if g1.len() > rank {
            continue;
        }
        for (g2, c) in skew_decompose(lam, &g1, rank) {
            out.insert((g1.clone(), g2), c);
        }
    }
    out
}

/// Cauchy decomposition `Lambda^n(E (x) F) = sum_{mu |- n} S_{mu^t} E (x) S_mu F`,
/// keeping the pairs `(mu^t, mu)` that survive on bundles of ranks `rank_e`, `rank_f`.
pub fn cauchy_wedge(n: u32, rank_e: usize, rank_f: usize) -> Vec<(Partition, Partition)> {
    let mut out: Vec<(Partition, Partition)> = partitions_of(n, rank_f, rank_e as u32)
        .into_iter()
        .map(|mu| (mu.conjugate(), mu))
        .collect();
    out.sort();
    out
}

/// Degree-`t` term of the Schur complex of `S_lam` applied to a map `E -> F (+) F`:
/// pairs `(alpha^t, beta)` with `alpha |- t`, `beta |- |lam| - t`, multiplicity `c^lam_{alpha,beta}`.
/// The first member indexes the source bundle, the second the doubled target.
pub fn schur_complex_terms(lam: &Partition, t: u32) -> Multiset<(Partition, Partition)> {
    let mut out = Multiset::new();
    if t > lam.size() {
        return out;
    }
    for alpha in subpartitions(lam) {
        if alpha.size() != t {
            continue;
        }
        let conj = alpha.conjugate();
        for (beta, c) in skew_decompose(lam, &alpha, usize::MAX) {
            out.insert((conj.clone(), beta), c);
        }
    }
    out
}
