//! Exhaustively generated families of small categories, monads and
//! adjunctions: posets up to isomorphism, closure operators, Galois
//! connections, finite monoids, full subcategories of finite sets, and a
//! brute-force monad search on any small category.

use std::collections::BTreeSet;
use std::sync::Arc;

use itertools::Itertools;

use crate::adjunctions::FinAdjunction;
use crate::error::{Error, Result};
use crate::fincat::{CategoryBuilder, FinCategory, FinFunctor, MorId, ObjId};
use crate::monadics::FinMonad;

/// A finite partial order (or preorder) on `0..n` as a dense relation matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poset {
    n: usize,
    leq: Vec<bool>,
}

impl Poset {
    pub fn new(n: usize, leq: impl Fn(usize, usize) -> bool) -> Self {
        let leq = (0..n * n).map(|k| leq(k / n, k % n)).collect();
        Poset { n, leq }
    }

    pub fn chain(n: usize) -> Self {
        Poset::new(n, |a, b| a <= b)
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.n + b]
    }

    pub fn category(&self) -> Arc<FinCategory> {
        Arc::new(FinCategory::from_preorder(self.n, |a, b| self.leq(a, b)).expect("posets are categories"))
    }

    fn relabel(&self, perm: &[usize]) -> Vec<bool> {
        let n = self.n;
        let mut out = vec![false; n * n];
        for a in 0..n {
            for b in 0..n {
                out[perm[a] * n + perm[b]] = self.leq(a, b);
            }
        }
        out
    }

    /// Lexicographically least relation matrix over all relabellings.
    pub fn canonical(&self) -> Poset {
        let leq = (0..self.n)
            .permutations(self.n)
            .map(|p| self.relabel(&p))
            .min()
            .unwrap_or_default();
        Poset { n: self.n, leq }
    }

    pub fn is_monotone(&self, target: &Poset, f: &[usize]) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| !self.leq(a, b) || target.leq(f[a], f[b])))
    }

    /// Adds a new element above exactly the elements of `below` (which must
    /// be down-closed).
    fn extend(&self, below: &[bool]) -> Poset {
        let n = self.n + 1;
        Poset::new(n, |a, b| {
            if a == self.n {
                b == self.n
            } else if b == self.n {
                below[a]
            } else {
                self.leq(a, b)
            }
        })
    }

    fn down_sets(&self) -> Vec<Vec<bool>> {
        (0..1usize << self.n)
            .map(|mask| (0..self.n).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
            .filter(|s| (0..self.n).all(|b| !s[b] || (0..self.n).all(|a| !self.leq(a, b) || s[a])))
            .collect()
    }
}

/// All posets with exactly `n` elements, one per isomorphism class, in canonical form.
pub fn posets_of_size(n: usize) -> Vec<Poset> {
    let mut level: BTreeSet<Poset> = BTreeSet::from([Poset::chain(0)]);
    for _ in 0..n {
        let mut next = BTreeSet::new();
        for p in &level {
            for d in p.down_sets() {
                next.insert(p.extend(&d).canonical());
            }
        }
        level = next;
    }
    level.into_iter().collect()
}

/// All posets with at most `max_n` elements (the empty poset included), up to isomorphism.
pub fn posets_up_to_iso(max_n: usize) -> Vec<Poset> {
    (0..=max_n).flat_map(posets_of_size).collect()
}

/// Every map `0..n → 0..m` satisfying `keep` on each prefix, by backtracking.
fn maps_where(n: usize, m: usize, keep: impl Fn(&[usize]) -> bool) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    fn go(n: usize, m: usize, cur: &mut Vec<usize>, keep: &dyn Fn(&[usize]) -> bool, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for v in 0..m {
            cur.push(v);
            if keep(cur) {
                go(n, m, cur, keep, out);
            }
            cur.pop();
        }
    }
    go(n, m, &mut cur, &keep, &mut out);
    out
}

/// Monotone maps `p → q`.
pub fn monotone_maps(p: &Poset, q: &Poset) -> Vec<Vec<usize>> {
    maps_where(p.len(), q.len(), |f| {
        let k = f.len() - 1;
        (0..k).all(|a| (!p.leq(a, k) || q.leq(f[a], f[k])) && (!p.leq(k, a) || q.leq(f[k], f[a])))
    })
}

/// Monotone, inflationary and idempotent endomaps of `p`.
pub fn closure_operators(p: &Poset) -> Vec<Vec<usize>> {
    monotone_maps(p, p)
        .into_iter()
        .filter(|c| (0..p.len()).all(|a| p.leq(a, c[a]) && c[c[a]] == c[a]))
        .collect()
}

/// The monad of an endomap `t` on a thin category; fails if `t` is not a closure operator.
pub fn closure_monad(c: &Arc<FinCategory>, t: &[ObjId]) -> Result<FinMonad> {
    let arrow = |a: ObjId, b: ObjId| {
        c.hom(a, b)
            .first()
            .copied()
            .ok_or_else(|| Error::shape(format!("{a} is not below {b}")))
    };
    let mors = c
        .morphism_ids()
        .map(|f| arrow(t[c.src(f)], t[c.dst(f)]))
        .collect::<Result<Vec<_>>>()?;
    let functor = FinFunctor::new(c.clone(), c.clone(), t.to_vec(), mors)?;
    let mu = c.objects().map(|a| arrow(t[t[a]], t[a])).collect::<Result<Vec<_>>>()?;
    let eta = c.objects().map(|a| arrow(a, t[a])).collect::<Result<Vec<_>>>()?;
    FinMonad::from_components(functor, mu, eta)
}

/// Every Galois connection `f ⊣ g` from `p` to `q` as the pair of object maps.
pub fn galois_connections(p: &Poset, q: &Poset) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut out = Vec::new();
    'maps: for f in monotone_maps(p, q) {
        let mut g = Vec::with_capacity(q.len());
        for y in 0..q.len() {
            let below: Vec<usize> = (0..p.len()).filter(|&x| q.leq(f[x], y)).collect();
            match below.iter().find(|&&m| below.iter().all(|&x| p.leq(x, m))) {
                Some(&m) => g.push(m),
                None => continue 'maps,
            }
        }
        out.push((f, g));
    }
    out
}

pub fn galois_adjunction(
    a: &Arc<FinCategory>,
    b: &Arc<FinCategory>,
    f: &[usize],
    g: &[usize],
) -> Result<FinAdjunction> {
    FinAdjunction::between_preorders(a, b, f, g)
}

/// Multiplication tables of all monoids of order `n` (element 0 the unit),
/// one per isomorphism class. Tables are filled cell by cell, pruning as soon
/// as a fully defined triple breaks associativity.
pub fn monoids_of_order(n: usize) -> Vec<Vec<Vec<usize>>> {
    if n == 0 {
        return Vec::new();
    }
    let mut table: Vec<Vec<Option<usize>>> = vec![vec![None; n]; n];
    for (a, row) in table.iter_mut().enumerate() {
        row[0] = Some(a);
    }
    for (b, cell) in table[0].iter_mut().enumerate() {
        *cell = Some(b);
    }
    let cells: Vec<(usize, usize)> = (1..n).flat_map(|x| (1..n).map(move |y| (x, y))).collect();
    let mut classes = BTreeSet::new();
    fill(&mut table, &cells, 0, &mut classes);
    classes.into_iter().collect()
}

fn associative_so_far(t: &[Vec<Option<usize>>]) -> bool {
    let n = t.len();
    (0..n).all(|x| {
        (0..n).all(|y| {
            (0..n).all(|z| {
                let left = t[x][y].and_then(|xy| t[xy][z]);
                let right = t[y][z].and_then(|yz| t[x][yz]);
                match (left, right) {
                    (Some(l), Some(r)) => l == r,
                    _ => true,
                }
            })
        })
    })
}

fn fill(
    table: &mut Vec<Vec<Option<usize>>>,
    cells: &[(usize, usize)],
    i: usize,
    classes: &mut BTreeSet<Vec<Vec<usize>>>,
) {
    let n = table.len();
    let Some(&(x, y)) = cells.get(i) else {
        let full: Vec<Vec<usize>> = table.iter().map(|r| r.iter().map(|v| v.expect("filled")).collect()).collect();
        classes.insert(canonical_table(&full));
        return;
    };
    for v in 0..n {
        table[x][y] = Some(v);
        if associative_so_far(table) {
            fill(table, cells, i + 1, classes);
        }
    }
    table[x][y] = None;
}

fn canonical_table(table: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let n = table.len();
    (1..n)
        .permutations(n - 1)
        .map(|p| {
            let mut perm = vec![0];
            perm.extend(p);
            let mut t = vec![vec![0; n]; n];
            for x in 0..n {
                for y in 0..n {
                    t[perm[x]][perm[y]] = perm[table[x][y]];
                }
            }
            t
        })
        .min()
        .expect("at least one permutation")
}

/// The full subcategory of finite sets on sets of the given sizes, with every
/// function as a morphism named `"{s}->{t}:{values}"`.
pub fn finset_category(sizes: &[usize]) -> Result<FinCategory> {
    let mut b = CategoryBuilder::new();
    let objs: Vec<ObjId> = sizes.iter().map(|s| b.object(&s.to_string())).collect();
    let mut funcs: Vec<(usize, usize, Vec<usize>, MorId)> = Vec::new();
    for (i, &s) in sizes.iter().enumerate() {
        for (j, &t) in sizes.iter().enumerate() {
            for vals in product(&vec![(0..t).collect(); s]) {
                let id = i == j && vals.iter().enumerate().all(|(x, &v)| x == v);
                let m = if id {
                    b.identity_of(objs[i])
                } else {
                    let name = format!("{s}->{t}:{}", vals.iter().join(""));
                    b.morphism(&name, objs[i], objs[j])
                };
                funcs.push((i, j, vals, m));
            }
        }
    }
    for (gi, gj, gv, g) in &funcs {
        for (fi, fj, fv, f) in &funcs {
            if fj != gi {
                continue;
            }
            let comp: Vec<usize> = fv.iter().map(|&x| gv[x]).collect();
            let (_, _, _, gf) = funcs
                .iter()
                .find(|(a, c, v, _)| a == fi && c == gj && *v == comp)
                .expect("composite is a function");
            b.compose(*g, *f, *gf);
        }
    }
    b.build()
}

/// Every tuple with `i`-th entry drawn from `factors[i]`; one empty tuple
/// when there are no factors.
fn product(factors: &[Vec<usize>]) -> Vec<Vec<usize>> {
    factors.iter().fold(vec![Vec::new()], |acc, f| {
        acc.into_iter()
            .flat_map(|t| {
                f.iter().map(move |&v| {
                    let mut t = t.clone();
                    t.push(v);
                    t
                })
            })
            .collect()
    })
}

/// Every endofunctor of `c`, by backtracking over the morphism map with
/// composition checked as soon as all three entries of a triple are set.
pub fn endofunctors(c: &Arc<FinCategory>) -> Vec<FinFunctor> {
    let n = c.num_objects();
    let m = c.num_morphisms();
    let order: Vec<MorId> = c
        .morphism_ids()
        .filter(|&f| c.is_identity(f))
        .chain(c.morphism_ids().filter(|&f| !c.is_identity(f)))
        .collect();
    let mut pos = vec![0; m];
    for (k, &f) in order.iter().enumerate() {
        pos[f] = k;
    }
    let mut ready: Vec<Vec<(MorId, MorId, MorId)>> = vec![Vec::new(); m];
    for g in c.morphism_ids() {
        for f in c.morphism_ids() {
            if let Some(gf) = c.compose(g, f) {
                ready[pos[g].max(pos[f]).max(pos[gf])].push((g, f, gf));
            }
        }
    }
    let mut out = Vec::new();
    for obj in product(&vec![(0..n).collect(); n]) {
        let mut map = vec![usize::MAX; m];
        search_functor(c, &obj, &order, &ready, 0, &mut map, &mut out);
    }
    out
}

fn search_functor(
    c: &Arc<FinCategory>,
    obj: &[ObjId],
    order: &[MorId],
    ready: &[Vec<(MorId, MorId, MorId)>],
    k: usize,
    map: &mut Vec<MorId>,
    out: &mut Vec<FinFunctor>,
) {
    if k == order.len() {
        out.push(FinFunctor::new(c.clone(), c.clone(), obj.to_vec(), map.clone()).expect("in range"));
        return;
    }
    let f = order[k];
    let candidates: Vec<MorId> = if c.is_identity(f) {
        vec![c.identity(obj[c.src(f)])]
    } else {
        c.hom(obj[c.src(f)], obj[c.dst(f)]).to_vec()
    };
    for v in candidates {
        map[f] = v;
        if ready[k].iter().all(|&(g, h, gh)| c.compose(map[g], map[h]) == Some(map[gh])) {
            search_functor(c, obj, order, ready, k + 1, map, out);
        }
    }
    map[f] = usize::MAX;
}

/// Every monad structure on every endofunctor of `c`.
pub fn monads_on(c: &Arc<FinCategory>) -> Vec<FinMonad> {
    let mut out = Vec::new();
    for t in endofunctors(c) {
        let tt = FinFunctor::compose(&t, &t).expect("endofunctors compose");
        for eta in natural_components(c, |a| a, |a| t.obj(a), |f| f, |f| t.mor(f)) {
            for mu in natural_components(c, |a| tt.obj(a), |a| t.obj(a), |f| tt.mor(f), |f| t.mor(f)) {
                let unit_ok = c.objects().all(|a| {
                    let ta = t.obj(a);
                    c.compose(mu[a], eta[ta]) == Some(c.identity(ta))
                        && c.compose(mu[a], t.mor(eta[a])) == Some(c.identity(ta))
                        && c.compose(mu[a], t.mor(mu[a])) == c.compose(mu[a], mu[ta])
                });
                if unit_ok {
                    let m = FinMonad::from_components(t.clone(), mu, eta.clone()).expect("well-shaped");
                    debug_assert!(m.validate().is_empty());
                    out.push(m);
                }
            }
        }
    }
    out
}

/// All families `α_a : F(a) → G(a)` natural with respect to every morphism.
fn natural_components(
    c: &FinCategory,
    f_obj: impl Fn(ObjId) -> ObjId,
    g_obj: impl Fn(ObjId) -> ObjId,
    f_mor: impl Fn(MorId) -> MorId,
    g_mor: impl Fn(MorId) -> MorId,
) -> Vec<Vec<MorId>> {
    let choices: Vec<Vec<MorId>> = c.objects().map(|a| c.hom(f_obj(a), g_obj(a)).to_vec()).collect();
    if choices.iter().any(Vec::is_empty) {
        return Vec::new();
    }
    let mut out = Vec::new();
    for comps in product(&choices) {
        let natural = c.morphism_ids().all(|h| {
            let (a, b) = (c.src(h), c.dst(h));
            c.compose(g_mor(h), comps[a]) == c.compose(comps[b], f_mor(h))
        });
        if natural {
            out.push(comps);
        }
    }
    out
}

/// The named categories searched exhaustively for monads: posets and
/// preorders with at most `max_objects` elements, monoids of order at most
/// `max_monoid`, and full subcategories of finite sets, keeping those with at
/// most `max_morphisms` morphisms.
pub fn search_categories(max_objects: usize, max_monoid: usize, max_morphisms: usize) -> Vec<(String, Arc<FinCategory>)> {
    let mut out = Vec::new();
    for p in preorders_up_to_iso(max_objects) {
        let kind = if p.is_antisymmetric() { "poset" } else { "preorder" };
        out.push((format!("{kind} {:?}", p.relation_pairs()), p.category()));
    }
    for n in 1..=max_monoid {
        for table in monoids_of_order(n) {
            let c = FinCategory::from_monoid(&table).expect("monoid tables are categories");
            out.push((format!("monoid {table:?}"), Arc::new(c)));
        }
    }
    let sizes: Vec<usize> = (0..=max_objects).collect();
    for k in 1..=max_objects {
        for subset in sizes.iter().copied().combinations(k) {
            if let Ok(c) = finset_category(&subset) {
                out.push((format!("finset {subset:?}"), Arc::new(c)));
            }
        }
    }
    out.retain(|(_, c)| c.num_objects() <= max_objects && c.num_morphisms() <= max_morphisms);
    out
}

impl Poset {
    pub fn is_antisymmetric(&self) -> bool {
        (0..self.n).all(|a| (0..self.n).all(|b| a == b || !(self.leq(a, b) && self.leq(b, a))))
    }

    /// Strict relations `(a, b)` with `a ≤ b`, `a ≠ b`.
    pub fn relation_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| (0..self.n).map(move |b| (a, b)))
            .filter(|&(a, b)| a != b && self.leq(a, b))
            .collect()
    }
}

/// All preorders with at most `max_n` elements up to isomorphism.
pub fn preorders_up_to_iso(max_n: usize) -> Vec<Poset> {
    let mut out = BTreeSet::new();
    for n in 0..=max_n {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).filter(|(a, b)| a != b).collect();
        for mask in 0..1usize << pairs.len() {
            let p = Poset::new(n, |a, b| a == b || pairs.iter().position(|&q| q == (a, b)).is_some_and(|i| mask >> i & 1 == 1));
            let transitive = (0..n).all(|a| (0..n).all(|b| (0..n).all(|c| !(p.leq(a, b) && p.leq(b, c)) || p.leq(a, c))));
            if transitive {
                out.insert(p.canonical());
            }
        }
    }
    out.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poset_counts_match_known_sequence() {
        let counts: Vec<usize> = (0..=5).map(|n| posets_of_size(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 16, 63]);
        assert_eq!(posets_up_to_iso(5).len(), 88);
    }

    #[test]
    fn preorder_counts_match_known_sequence() {
        let counts: Vec<usize> = (0..=3)
            .map(|n| preorders_up_to_iso(3).iter().filter(|p| p.len() == n).count())
            .collect();
        assert_eq!(counts, vec![1, 1, 3, 9]);
    }

    #[test]
    fn monoid_counts_match_known_sequence() {
        let counts: Vec<usize> = (1..=5).map(|n| monoids_of_order(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 7, 35, 228]);
    }

    #[test]
    fn closure_operators_on_three_chain() {
        assert_eq!(closure_operators(&Poset::chain(3)).len(), 4);
    }

    #[test]
    fn galois_connections_on_two_chain() {
        let c = Poset::chain(2);
        let g = galois_connections(&c, &c);
        assert_eq!(g, vec![(vec![0, 0], vec![1, 1]), (vec![0, 1], vec![0, 1])]);
    }

    #[test]
    fn finset_category_sizes() {
        let c = finset_category(&[0, 1, 2]).unwrap();
        assert_eq!(c.num_morphisms(), 11);
        assert!(c.validate().is_empty());
        assert_eq!(finset_category(&[2]).unwrap().num_morphisms(), 4);
    }

    #[test]
    fn endofunctors_of_the_two_element_group() {
        let c = Arc::new(FinCategory::from_monoid(&[vec![0, 1], vec![1, 0]]).unwrap());
        assert_eq!(endofunctors(&c).len(), 2);
        assert_eq!(monads_on(&c).len(), 2);
    }

    #[test]
    fn monad_search_matches_closure_operators_on_posets() {
        for p in posets_up_to_iso(3) {
            let c = p.category();
            assert_eq!(monads_on(&c).len(), closure_operators(&p).len());
        }
    }
}
