//! Concrete finite groups as multiplication tables, with subgroup,
//! conjugacy, centralizer, and commutator machinery.
//!
//! Elements are `usize` indices into the table; index 0 is always the
//! identity. Everything is immutable after construction and safe to share
//! read-only across threads.

use std::fmt;
use std::sync::Arc;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::error::{Error, Result};

/// Orders up to this bound get an exhaustive associativity check at
/// construction; larger tables are checked on random triples.
pub const EXHAUSTIVE_ASSOC_BOUND: usize = 64;
const SAMPLED_ASSOC_TRIPLES: usize = 10_000;

/// A finite group given by its full multiplication table.
#[derive(Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    /// Row-major `order x order` table; `table[g * order + h] = g * h`.
    table: Vec<usize>,
    inverse: Vec<usize>,
    label: String,
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FiniteGroup({}, order {})", self.label, self.order)
    }
}

impl FiniteGroup {
    /// Validates a multiplication table and builds the group.
    ///
    /// The identity is normalized to index 0: if the table's two-sided
    /// identity sits elsewhere, elements are relabeled by swapping it with 0.
    /// Rejects anything that is not a group, naming the first failure found.
    pub fn from_table(table: Vec<Vec<usize>>, label: impl Into<String>) -> Result<FiniteGroup> {
        let n = table.len();
        if n == 0 {
            return Err(Error::NotAGroup("empty table".into()));
        }
        for (i, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::NotAGroup(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::NotAGroup(format!(
                        "entry ({i},{j}) = {v} out of range 0..{n}"
                    )));
                }
            }
        }
        let mut flat = Vec::with_capacity(n * n);
        for row in &table {
            flat.extend_from_slice(row);
        }
        Self::from_flat(flat, n, label.into())
    }

    fn from_flat(mut flat: Vec<usize>, n: usize, label: String) -> Result<FiniteGroup> {
        let at = |t: &[usize], a: usize, b: usize| t[a * n + b];

        // Latin square: each row and column is a permutation of 0..n.
        let mut seen = vec![false; n];
        for g in 0..n {
            seen.fill(false);
            for h in 0..n {
                let v = at(&flat, g, h);
                if seen[v] {
                    return Err(Error::NotAGroup(format!("row {g} repeats entry {v}")));
                }
                seen[v] = true;
            }
        }
        for h in 0..n {
            seen.fill(false);
            for g in 0..n {
                let v = at(&flat, g, h);
                if seen[v] {
                    return Err(Error::NotAGroup(format!("column {h} repeats entry {v}")));
                }
                seen[v] = true;
            }
        }

        // Two-sided identity, relabeled to index 0 if found elsewhere.
        let identity = (0..n).find(|&e| {
            (0..n).all(|x| at(&flat, e, x) == x) && (0..n).all(|x| at(&flat, x, e) == x)
        });
        let e = identity.ok_or_else(|| Error::NotAGroup("no two-sided identity".into()))?;
        if e != 0 {
            let perm: Vec<usize> = (0..n)
                .map(|x| if x == e { 0 } else if x == 0 { e } else { x })
                .collect();
            let mut relabeled = vec![0usize; n * n];
            for a in 0..n {
                for b in 0..n {
                    relabeled[perm[a] * n + perm[b]] = perm[at(&flat, a, b)];
                }
            }
            flat = relabeled;
        }

        // Associativity: exhaustive at small orders, sampled above. The
        // sample is seeded so repeated runs behave identically.
        if n <= EXHAUSTIVE_ASSOC_BOUND {
            for a in 0..n {
                for b in 0..n {
                    let ab = at(&flat, a, b);
                    for c in 0..n {
                        if at(&flat, ab, c) != at(&flat, a, at(&flat, b, c)) {
                            return Err(Error::NotAGroup(format!(
                                "associativity fails at triple ({a},{b},{c})"
                            )));
                        }
                    }
                }
            }
        } else {
            let mut rng = StdRng::seed_from_u64(0x7ab1e);
            for _ in 0..SAMPLED_ASSOC_TRIPLES {
                let a = rng.random_range(0..n);
                let b = rng.random_range(0..n);
                let c = rng.random_range(0..n);
                if at(&flat, at(&flat, a, b), c) != at(&flat, a, at(&flat, b, c)) {
                    return Err(Error::NotAGroup(format!(
                        "associativity fails at triple ({a},{b},{c})"
                    )));
                }
            }
        }

        let mut inverse = vec![0usize; n];
        for g in 0..n {
            let h = (0..n)
                .find(|&h| at(&flat, g, h) == 0)
                .expect("latin row contains identity");
            if at(&flat, h, g) != 0 {
                return Err(Error::NotAGroup(format!(
                    "element {g} has mismatched left/right inverses"
                )));
            }
            inverse[g] = h;
        }

        Ok(FiniteGroup {
            order: n,
            table: flat,
            inverse,
            label,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    /// Conjugate `y^-1 x y`.
    #[inline]
    pub fn conj(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(y), x), y)
    }

    /// Commutator `[x, y] = x^-1 y^-1 x y`.
    #[inline]
    pub fn comm(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.inv(x), self.inv(y)), self.mul(x, y))
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    pub fn element_order(&self, x: usize) -> usize {
        let mut p = x;
        let mut ord = 1;
        while p != 0 {
            p = self.mul(p, x);
            ord += 1;
        }
        ord
    }

    /// Multiset of element orders, sorted; a cheap isomorphism-invariant
    /// fingerprint used by tests and debug output.
    pub fn order_profile(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.elements().map(|x| self.element_order(x)).collect();
        v.sort_unstable();
        v
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }
}

/// A subgroup of a [`FiniteGroup`], stored as a strictly increasing list of
/// element indices.
#[derive(Clone)]
pub struct Subgroup {
    parent: Arc<FiniteGroup>,
    elements: Vec<usize>,
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subgroup(order {} of {})",
            self.elements.len(),
            self.parent.label
        )
    }
}

impl Subgroup {
    /// Internal constructor for element sets already known to be closed.
    pub(crate) fn from_sorted(parent: Arc<FiniteGroup>, elements: Vec<usize>) -> Subgroup {
        debug_assert!(elements.windows(2).all(|w| w[0] < w[1]));
        debug_assert_eq!(elements.first(), Some(&0));
        debug_assert_eq!(parent.order % elements.len(), 0, "Lagrange violation");
        Subgroup { parent, elements }
    }

    /// Smallest subgroup containing `gens`, by breadth-first closure.
    /// Indices must lie in the parent; the empty set closes to the trivial
    /// subgroup.
    pub fn closure(parent: &Arc<FiniteGroup>, gens: &[usize]) -> Subgroup {
        let n = parent.order();
        let mut member = vec![false; n];
        member[0] = true;
        let mut work: Vec<usize> = vec![0];
        for &g in gens {
            assert!(g < n, "generator index {g} out of range");
            if !member[g] {
                member[g] = true;
                work.push(g);
            }
        }
        // Generated sets of a finite group close under products alone.
        let mut i = 0;
        while i < work.len() {
            let a = work[i];
            i += 1;
            for j in 0..work.len() {
                for (x, y) in [(a, work[j]), (work[j], a)] {
                    let p = parent.mul(x, y);
                    if !member[p] {
                        member[p] = true;
                        work.push(p);
                    }
                }
            }
        }
        let elements: Vec<usize> = (0..n).filter(|&x| member[x]).collect();
        Subgroup::from_sorted(parent.clone(), elements)
    }

    pub fn trivial(parent: &Arc<FiniteGroup>) -> Subgroup {
        Subgroup::from_sorted(parent.clone(), vec![0])
    }

    pub fn whole(parent: &Arc<FiniteGroup>) -> Subgroup {
        Subgroup::from_sorted(parent.clone(), (0..parent.order()).collect())
    }

    pub fn parent(&self) -> &Arc<FiniteGroup> {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.binary_search(&x).is_ok()
    }

    /// Position of `x` within the sorted element list.
    pub fn position(&self, x: usize) -> Option<usize> {
        self.elements.binary_search(&x).ok()
    }

    pub fn is_whole_group(&self) -> bool {
        self.order() == self.parent.order()
    }

    /// True iff `g^-1 s g` stays in the subgroup for every `g` in the parent.
    pub fn is_normal(&self) -> bool {
        let g = &self.parent;
        g.elements()
            .all(|y| self.elements.iter().all(|&s| self.contains(g.conj(s, y))))
    }

    pub fn intersect(&self, other: &Subgroup) -> Subgroup {
        let elements: Vec<usize> = self
            .elements
            .iter()
            .copied()
            .filter(|&x| other.contains(x))
            .collect();
        Subgroup::from_sorted(self.parent.clone(), elements)
    }

    /// `{k in self : [x, k] = 1 for all x in xs}`. With a single element
    /// this is the ordinary centralizer of that element; with a whole
    /// subgroup's elements it is the centralizer of the subgroup.
    pub fn centralizer_of(&self, xs: &[usize]) -> Subgroup {
        let g = &self.parent;
        let elements: Vec<usize> = self
            .elements
            .iter()
            .copied()
            .filter(|&k| xs.iter().all(|&x| g.mul(x, k) == g.mul(k, x)))
            .collect();
        Subgroup::from_sorted(self.parent.clone(), elements)
    }

    /// Order of the product set `self * other`, via `|H||K| / |H ∩ K|`.
    pub fn product_order(&self, other: &Subgroup) -> usize {
        self.order() * other.order() / self.intersect(other).order()
    }

    /// Greedily picks a small generating set: repeatedly add the least
    /// element not yet generated. Deterministic; the trivial subgroup gets
    /// an empty set.
    pub fn small_generating_set(&self) -> Vec<usize> {
        let mut gens: Vec<usize> = Vec::new();
        let mut generated = Subgroup::trivial(&self.parent);
        while generated.order() < self.order() {
            let next = self
                .elements
                .iter()
                .copied()
                .find(|&x| !generated.contains(x))
                .expect("closure is a subset of the subgroup");
            gens.push(next);
            generated = Subgroup::closure(&self.parent, &gens);
        }
        gens
    }
}

/// The partition of a normal subgroup `H` into conjugacy classes under the
/// action of a subgroup `K`.
#[derive(Debug, Clone)]
pub struct ClassPartition {
    classes: Vec<Vec<usize>>,
    reps: Vec<usize>,
}

impl ClassPartition {
    /// Orbits of `H`'s elements under conjugation by `K`. Class
    /// representatives are the class minima; classes are listed by
    /// ascending representative. Fails with `NotNormal` if conjugation
    /// ever leaves `H`.
    pub fn compute(h: &Subgroup, k: &Subgroup) -> Result<ClassPartition> {
        let g = h.parent();
        assert_eq!(
            g.order(),
            k.parent().order(),
            "subgroups come from different groups"
        );
        let mut assigned = vec![false; g.order()];
        let mut classes = Vec::new();
        let mut reps = Vec::new();
        for &start in h.elements() {
            if assigned[start] {
                continue;
            }
            let mut orbit = vec![start];
            assigned[start] = true;
            let mut i = 0;
            while i < orbit.len() {
                let x = orbit[i];
                i += 1;
                for &y in k.elements() {
                    let c = g.conj(x, y);
                    if !h.contains(c) {
                        return Err(Error::NotNormal(format!(
                            "conjugating {x} by {y} leaves H"
                        )));
                    }
                    if !assigned[c] {
                        assigned[c] = true;
                        orbit.push(c);
                    }
                }
            }
            orbit.sort_unstable();
            reps.push(orbit[0]);
            classes.push(orbit);
        }
        Ok(ClassPartition { classes, reps })
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    /// `k_K(H)`, the number of classes.
    pub fn count(&self) -> usize {
        self.classes.len()
    }
}

/// Subgroup generated by all commutators `[h, k]`, `h in H`, `k in K`.
pub fn relative_commutator(h: &Subgroup, k: &Subgroup) -> Subgroup {
    let g = h.parent();
    let mut gens: Vec<usize> = Vec::new();
    for &a in h.elements() {
        for &b in k.elements() {
            gens.push(g.comm(a, b));
        }
    }
    gens.sort_unstable();
    gens.dedup();
    Subgroup::closure(g, &gens)
}

/// Least prime dividing `n`, or `None` for `n = 1`.
pub fn smallest_prime_divisor(n: u64) -> Option<u64> {
    assert!(n >= 1);
    if n == 1 {
        return None;
    }
    if n % 2 == 0 {
        return Some(2);
    }
    let mut p = 3;
    while p * p <= n {
        if n % p == 0 {
            return Some(p);
        }
        p += 2;
    }
    Some(n)
}
