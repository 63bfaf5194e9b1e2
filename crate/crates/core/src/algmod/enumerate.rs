use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use itertools::Itertools;
use rayon::prelude::*;

use crate::error::Result;
use crate::ffla::{Matrix, PrimeField};

use super::construct::{are_isomorphic, invariants, IsoStatus};
use super::hom::HomSpace;
use super::module::linear_combination;
use super::{FqAlgebra, LeftModule};

/// Default cap on the size of any single brute-force scan.
pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// Modules of dimension at most `max_dim`, pairwise non-isomorphic, sorted
/// by [`LeftModule::key`]. `complete` is false when some scan hit the budget,
/// in which case `gaps` says where.
#[derive(Debug, Clone)]
pub struct ModuleWindow {
    pub modules: Vec<LeftModule>,
    pub max_dim: usize,
    pub complete: bool,
    pub gaps: Vec<String>,
}

/// A presentation of the algebra by generators drawn from its basis: words
/// `w = parent · g` whose values form a basis, and the relations that make
/// an assignment of generator matrices a representation.
struct Presentation {
    generators: Vec<usize>,
    words: Vec<(usize, usize)>,
    levels: Vec<usize>,
    checks: Vec<Vec<Check>>,
    to_words: Matrix,
    min_polys: Vec<Vec<u32>>,
}

/// `ρ(word) · ρ(generator) = Σ coeff · ρ(w)`.
struct Check {
    word: usize,
    generator: usize,
    rhs: Vec<(usize, u32)>,
}

impl Presentation {
    fn new(a: &FqAlgebra) -> Self {
        let d = a.dim();
        let generators = (0..=d)
            .flat_map(|k| (0..d).combinations(k))
            .find(|g| span_of_words(a, g).len() == d)
            .expect("the whole basis generates");
        let f = a.field();
        let mut values = vec![a.unit().to_vec()];
        let mut words = vec![(usize::MAX, usize::MAX)];
        let mut levels = Vec::new();
        let mut checks = Vec::new();
        let mut prev = 0;
        for t in 0..generators.len() {
            let mut stage = Vec::new();
            let mut i = 0;
            while i < values.len() {
                for (g, &generator) in generators.iter().enumerate().take(t + 1) {
                    if i < prev && g < t {
                        continue;
                    }
                    let v = a.mul(&values[i], &a.basis_vector(generator));
                    let span = Matrix::from_columns(f, d, &values);
                    match span.solve(&v).expect("lengths match") {
                        Some(x) => stage.push(Check {
                            word: i,
                            generator: g,
                            rhs: x.into_iter().enumerate().filter(|&(_, c)| c != 0).collect(),
                        }),
                        None => {
                            values.push(v);
                            words.push((i, g));
                        }
                    }
                }
                i += 1;
            }
            prev = values.len();
            levels.push(values.len());
            checks.push(stage);
        }
        let to_words = Matrix::from_columns(f, d, &values)
            .inverse()
            .expect("word values form a basis");
        let min_polys = generators
            .iter()
            .map(|&g| a.minimal_polynomial(&a.basis_vector(g)))
            .collect();
        Presentation {
            generators,
            words,
            levels,
            checks,
            to_words,
            min_polys,
        }
    }
}

fn span_of_words(a: &FqAlgebra, gens: &[usize]) -> Vec<Vec<u32>> {
    let f = a.field();
    let mut values = vec![a.unit().to_vec()];
    let mut i = 0;
    while i < values.len() {
        for &g in gens {
            let v = a.mul(&values[i], &a.basis_vector(g));
            if Matrix::from_columns(f, a.dim(), &values).solve(&v).expect("lengths").is_none() {
                values.push(v);
            }
        }
        i += 1;
    }
    values
}

fn eval_poly(poly: &[u32], m: &Matrix) -> Matrix {
    let f = m.field();
    let n = m.rows();
    poly.iter().rev().fold(Matrix::zeros(f, n, n), |acc, &c| {
        &(&acc * m) + &Matrix::identity(f, n).scale(c)
    })
}

fn all_matrices(f: PrimeField, n: usize) -> impl Iterator<Item = Matrix> {
    let total = f.count(n * n).unwrap_or(0);
    (0..total).map(move |k| Matrix::from_flat(f, n, n, f.vector(n * n, k)).expect("shape"))
}

/// One member of each conjugacy class among `candidates` (a conjugation-stable set).
fn class_representatives(f: PrimeField, n: usize, candidates: &[Matrix]) -> Vec<Matrix> {
    let gl: Vec<(Matrix, Matrix)> = all_matrices(f, n)
        .filter_map(|g| g.inverse().map(|inv| (g, inv)))
        .collect();
    let mut seen: HashSet<Vec<u32>> = HashSet::new();
    let mut reps = Vec::new();
    for a in candidates {
        if seen.contains(a.data()) {
            continue;
        }
        for (g, inv) in &gl {
            seen.insert((&(g * a) * inv).flatten());
        }
        reps.push(a.clone());
    }
    reps
}

struct Search<'a> {
    algebra: &'a Arc<FqAlgebra>,
    pres: &'a Presentation,
    candidates: &'a [Vec<Matrix>],
    n: usize,
    node_cap: u64,
}

impl Search<'_> {
    /// Extends the assignment `rho` (word values) after generator `t` was fixed.
    fn run(&self, t: usize, assigned: &mut Vec<Matrix>, rho: &mut Vec<Matrix>, out: &mut Vec<LeftModule>, nodes: &mut u64) -> bool {
        *nodes += 1;
        if *nodes > self.node_cap {
            return false;
        }
        let start = rho.len();
        for w in start..self.pres.levels[t] {
            let (parent, g) = self.pres.words[w];
            let value = &rho[parent] * &assigned[g];
            rho.push(value);
        }
        let f = self.algebra.field();
        let ok = self.pres.checks[t].iter().all(|c| {
            let lhs = &rho[c.word] * &assigned[c.generator];
            let rhs = c
                .rhs
                .iter()
                .fold(Matrix::zeros(f, self.n, self.n), |acc, &(w, x)| &acc + &rho[w].scale(x));
            lhs == rhs
        });
        let mut complete = true;
        if ok {
            if t + 1 == self.pres.generators.len() {
                out.push(self.module(rho));
            } else {
                for cand in &self.candidates[t + 1] {
                    assigned.push(cand.clone());
                    complete &= self.run(t + 1, assigned, rho, out, nodes);
                    assigned.pop();
                    if !complete {
                        break;
                    }
                }
            }
        }
        rho.truncate(start);
        complete
    }

    fn module(&self, rho: &[Matrix]) -> LeftModule {
        let f = self.algebra.field();
        let action = (0..self.algebra.dim())
            .map(|i| linear_combination(f, self.n, &self.pres.to_words.column(i), rho))
            .collect();
        LeftModule::unchecked(self.algebra, action).expect("shapes agree")
    }
}

/// All modules of dimension exactly `n` up to conjugation of the first
/// generator, or `None` when a scan exceeds `budget`.
fn modules_of_dim(a: &Arc<FqAlgebra>, pres: &Presentation, n: usize, budget: u64) -> Option<Vec<LeftModule>> {
    let f = a.field();
    let identity = Matrix::identity(f, n);
    if pres.generators.is_empty() {
        let action = (0..a.dim()).map(|i| identity.scale(pres.to_words.get(0, i))).collect();
        return Some(vec![LeftModule::unchecked(a, action).expect("shapes agree")]);
    }
    if f.count(n * n).is_none_or(|t| t > budget) {
        return None;
    }
    let mut candidates: Vec<Vec<Matrix>> = pres
        .min_polys
        .iter()
        .map(|poly| all_matrices(f, n).filter(|m| eval_poly(poly, m).is_zero()).collect())
        .collect();
    candidates[0] = class_representatives(f, n, &candidates[0]);
    let search = Search {
        algebra: a,
        pres,
        candidates: &candidates,
        n,
        node_cap: budget.saturating_mul(16),
    };
    let results: Vec<Option<Vec<LeftModule>>> = candidates[0]
        .par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut nodes = 0;
            let mut assigned = vec![first.clone()];
            let mut rho = vec![identity.clone()];
            search
                .run(0, &mut assigned, &mut rho, &mut out, &mut nodes)
                .then_some(out)
        })
        .collect();
    results.into_iter().collect::<Option<Vec<_>>>().map(|v| v.concat())
}

/// Every module of dimension `≤ max_dim` up to isomorphism. Candidates are
/// bucketed by dimension, action ranks and `dim End` before pairwise
/// isomorphism search; each class is represented by its smallest key.
pub fn enumerate_modules(a: &Arc<FqAlgebra>, max_dim: usize, budget: u64) -> Result<ModuleWindow> {
    let pres = Presentation::new(a);
    let mut window = ModuleWindow {
        modules: vec![LeftModule::zero(a)],
        max_dim,
        complete: true,
        gaps: Vec::new(),
    };
    for n in 1..=max_dim {
        let Some(found) = modules_of_dim(a, &pres, n, budget) else {
            window.complete = false;
            window.gaps.push(format!("dimension {n}: candidate scan exceeds budget {budget}"));
            continue;
        };
        let mut buckets: BTreeMap<(usize, Vec<usize>, usize), Vec<LeftModule>> = BTreeMap::new();
        for m in found {
            let key = {
                let (d, ranks) = invariants(&m);
                (d, ranks, HomSpace::compute(&m, &m)?.dim())
            };
            let reps = buckets.entry(key).or_default();
            let mut matched = false;
            for rep in reps.iter_mut() {
                match are_isomorphic(rep, &m, budget)? {
                    IsoStatus::Isomorphic(_) => {
                        if m.key() < rep.key() {
                            *rep = m.clone();
                        }
                        matched = true;
                        break;
                    }
                    IsoStatus::NotIsomorphic => {}
                    IsoStatus::Undecided { needed, .. } => {
                        window.complete = false;
                        window.gaps.push(format!("dimension {n}: isomorphism search needs {needed}"));
                    }
                }
            }
            if !matched {
                reps.push(m);
            }
        }
        window.modules.extend(buckets.into_values().flatten());
    }
    window.modules.sort_by_cached_key(LeftModule::key);
    Ok(window)
}
