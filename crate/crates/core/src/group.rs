//! Concrete finite groups as multiplication tables over element indices.

use crate::bitset::ElemSet;

/// A finite group given by its full multiplication table. Element 0 is always
/// the identity. Immutable after construction and safe to share across
/// threads.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    order: usize,
    mul: Vec<u16>,
    inv: Vec<u16>,
    labels: Vec<String>,
    spec_text: String,
}

/// Exhaustive associativity checking is quadratic-times-order; above this
/// order the check samples triples instead.
pub const EXHAUSTIVE_ASSOC_BOUND: usize = 512;
const ASSOC_SAMPLES: usize = 1_000_000;

impl FiniteGroup {
    /// Build a table from a multiplication function. Panics if the table does
    /// not satisfy the group axioms; constructors are expected to be correct.
    pub(crate) fn from_fn(
        order: usize,
        labels: Vec<String>,
        spec_text: String,
        mul: impl Fn(usize, usize) -> usize,
    ) -> FiniteGroup {
        assert!(order >= 1 && order <= u16::MAX as usize);
        assert_eq!(labels.len(), order);
        let mut table = vec![0u16; order * order];
        for a in 0..order {
            for b in 0..order {
                let c = mul(a, b);
                debug_assert!(c < order);
                table[a * order + b] = c as u16;
            }
        }
        let mut inv = vec![0u16; order];
        for a in 0..order {
            let row = &table[a * order..(a + 1) * order];
            let b = row
                .iter()
                .position(|&c| c == 0)
                .expect("every row must reach the identity");
            inv[a] = b as u16;
        }
        let g = FiniteGroup {
            order,
            mul: table,
            inv,
            labels,
            spec_text,
        };
        if let Err(e) = g.check_axioms() {
            panic!("constructed table for {} is not a group: {e}", g.spec_text);
        }
        g
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        0
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    pub fn label(&self, x: usize) -> &str {
        &self.labels[x]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn spec_text(&self) -> &str {
        &self.spec_text
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `x y x^-1 y^-1`.
    pub fn commutator(&self, x: usize, y: usize) -> usize {
        self.mul(self.mul(self.mul(x, y), self.inv(x)), self.inv(y))
    }

    pub fn pow(&self, x: usize, k: usize) -> usize {
        let mut acc = 0;
        for _ in 0..k {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// Smallest `k >= 1` with `x^k` the identity.
    pub fn element_order(&self, x: usize) -> usize {
        assert!(x < self.order);
        let mut k = 1;
        let mut acc = x;
        while acc != 0 {
            acc = self.mul(acc, x);
            k += 1;
        }
        k
    }

    /// Subgroup generated by `seed`: the smallest subset containing the seed
    /// and the identity that is closed under multiplication (and therefore,
    /// the group being finite, under inverses).
    pub fn closure(&self, seed: &[usize]) -> ElemSet {
        self.closure_with_limit(seed, self.order)
            .expect("closure within the whole group cannot overflow")
    }

    /// Like [`closure`](Self::closure) but gives up once more than `limit`
    /// elements have been discovered, returning `None`. Discovery order is a
    /// breadth-first walk multiplying on the right by each generator.
    pub fn closure_with_limit(&self, seed: &[usize], limit: usize) -> Option<ElemSet> {
        let mut set = ElemSet::new(self.order);
        set.insert(0);
        let mut queue: Vec<usize> = vec![0];
        let mut count = 1;
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            for &g in seed {
                let y = self.mul(x, g);
                if !set.contains(y) {
                    set.insert(y);
                    count += 1;
                    if count > limit {
                        return None;
                    }
                    queue.push(y);
                }
            }
        }
        Some(set)
    }

    /// A small generating set, chosen greedily over ascending element indices.
    pub fn generating_set(&self) -> Vec<usize> {
        let mut gens = Vec::new();
        let mut span = ElemSet::new(self.order);
        span.insert(0);
        for x in 0..self.order {
            if !span.contains(x) {
                gens.push(x);
                span = self.closure(&gens);
                if span.len() == self.order {
                    break;
                }
            }
        }
        gens
    }

    pub fn is_abelian(&self) -> bool {
        for a in 0..self.order {
            for b in (a + 1)..self.order {
                if self.mul(a, b) != self.mul(b, a) {
                    return false;
                }
            }
        }
        true
    }

    /// Elements commuting with everything.
    pub fn center(&self) -> ElemSet {
        let mut z = ElemSet::new(self.order);
        for x in 0..self.order {
            if (0..self.order).all(|y| self.mul(x, y) == self.mul(y, x)) {
                z.insert(x);
            }
        }
        z
    }

    /// Closure of all commutators of elements of `within`.
    pub fn derived_subgroup_of(&self, within: &ElemSet) -> ElemSet {
        let members = within.to_vec();
        let mut comms: Vec<usize> = Vec::new();
        let mut seen = ElemSet::new(self.order);
        for &x in &members {
            for &y in &members {
                let c = self.commutator(x, y);
                if !seen.contains(c) {
                    seen.insert(c);
                    comms.push(c);
                }
            }
        }
        self.closure(&comms)
    }

    pub fn derived_subgroup(&self) -> ElemSet {
        self.derived_subgroup_of(&ElemSet::full(self.order))
    }

    /// True when the derived series reaches the trivial subgroup.
    pub fn is_solvable(&self) -> bool {
        let mut cur = ElemSet::full(self.order);
        loop {
            let next = self.derived_subgroup_of(&cur);
            if next.len() == 1 {
                return true;
            }
            if next == cur {
                return false;
            }
            cur = next;
        }
    }

    /// True when every Sylow subgroup is normal, decided by checking that for
    /// each prime `p` dividing the order, the elements of `p`-power order
    /// generate a subgroup of exactly the Sylow order.
    pub fn is_nilpotent(&self) -> bool {
        for (p, e) in factorize(self.order) {
            let sylow_order = p.pow(e as u32);
            let p_elements: Vec<usize> = (0..self.order)
                .filter(|&x| is_power_of(self.element_order(x), p))
                .collect();
            match self.closure_with_limit(&p_elements, sylow_order) {
                Some(s) if s.len() == sylow_order => {}
                _ => return false,
            }
        }
        true
    }

    /// Group-axiom sweep: identity row/column, Latin square, inverses, and
    /// associativity (exhaustive up to [`EXHAUSTIVE_ASSOC_BOUND`], sampled
    /// deterministically above it).
    pub fn check_axioms(&self) -> Result<(), String> {
        let n = self.order;
        for x in 0..n {
            if self.mul(0, x) != x || self.mul(x, 0) != x {
                return Err(format!("element 0 does not act as the identity on {x}"));
            }
            if self.mul(x, self.inv(x)) != 0 || self.mul(self.inv(x), x) != 0 {
                return Err(format!("inverse table is wrong at {x}"));
            }
        }
        let mut seen = vec![false; n];
        for a in 0..n {
            seen.fill(false);
            for b in 0..n {
                let c = self.mul(a, b);
                if seen[c] {
                    return Err(format!("row {a} is not a permutation"));
                }
                seen[c] = true;
            }
            seen.fill(false);
            for b in 0..n {
                let c = self.mul(b, a);
                if seen[c] {
                    return Err(format!("column {a} is not a permutation"));
                }
                seen[c] = true;
            }
        }
        let check = |a: usize, b: usize, c: usize| -> Result<(), String> {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                return Err(format!("associativity fails on ({a}, {b}, {c})"));
            }
            Ok(())
        };
        if n <= EXHAUSTIVE_ASSOC_BOUND {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut state = 0x9e3779b97f4a7c15u64 ^ (n as u64);
            for _ in 0..ASSOC_SAMPLES {
                let a = (splitmix(&mut state) % n as u64) as usize;
                let b = (splitmix(&mut state) % n as u64) as usize;
                let c = (splitmix(&mut state) % n as u64) as usize;
                check(a, b, c)?;
            }
        }
        Ok(())
    }
}

fn splitmix(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e3779b97f4a7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

/// Prime factorization as `(prime, exponent)` pairs in ascending order.
pub fn factorize(mut n: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn is_power_of(mut n: usize, p: usize) -> bool {
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}
