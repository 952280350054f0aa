//! Constructors: realize a [`GroupSpec`] as a concrete multiplication table.
//!
//! Element numbering is deterministic: the identity is index 0, direct
//! products use lexicographic pairs with the left factor major, semidirect
//! products number `(normal, complement)` pairs as
//! `normal_index * |complement| + complement_index`, and permutation closures
//! number elements in breadth-first discovery order.

use crate::arith::Mat2;
use crate::error::Error;
use crate::group::FiniteGroup;
use crate::spec::{cycle_notation, GroupSpec};
use crate::Limits;

pub fn build(spec: &GroupSpec, limits: &Limits) -> Result<FiniteGroup, Error> {
    spec.validate()?;
    if let Some(order) = spec.known_order() {
        if order as usize > limits.max_group_order {
            return Err(Error::OrderBound {
                order: order as usize,
                bound: limits.max_group_order,
            });
        }
    }
    let text = spec.to_string();
    Ok(match spec {
        GroupSpec::Cyclic(n) => cyclic(*n as usize, text),
        GroupSpec::Dihedral(m) => dihedral(*m as usize, text),
        GroupSpec::Dicyclic(k) => dicyclic(*k as usize, text),
        GroupSpec::SdCyclic { q, m, alpha } => sd_cyclic(*q, *m, *alpha, text),
        GroupSpec::SdElemAb { p, m, beta } => sd_elem_ab(*p, *m, *beta, text),
        GroupSpec::PermClosure { degree, gens } => {
            perm_closure(*degree as usize, gens, text, limits)?
        }
        GroupSpec::DirectProduct(a, b) => {
            let left = build(a, limits)?;
            let right = build(b, limits)?;
            direct_product(&left, &right, text)
        }
    })
}

impl GroupSpec {
    pub fn build(&self, limits: &Limits) -> Result<FiniteGroup, Error> {
        build(self, limits)
    }
}

fn power_label(sym: &str, e: usize) -> String {
    match e {
        0 => "e".to_string(),
        1 => sym.to_string(),
        _ => format!("{sym}^{e}"),
    }
}

fn cyclic(n: usize, text: String) -> FiniteGroup {
    let labels = (0..n).map(|i| power_label("a", i)).collect();
    FiniteGroup::from_fn(n, labels, text, |i, j| (i + j) % n)
}

/// Order `m = 2n`: rotations `r^i` at indices `0..n`, reflections `s r^i` at
/// `n..2n`. `(s^f r^i)(s^g r^j) = s^(f+g) r^(j +- i)`.
fn dihedral(m: usize, text: String) -> FiniteGroup {
    let n = m / 2;
    let labels = (0..m)
        .map(|x| {
            let (f, i) = (x / n, x % n);
            if f == 0 {
                power_label("r", i)
            } else if i == 0 {
                "s".to_string()
            } else {
                format!("s {}", power_label("r", i))
            }
        })
        .collect();
    FiniteGroup::from_fn(m, labels, text, move |x, y| {
        let (f, i) = (x / n, x % n);
        let (g, j) = (y / n, y % n);
        let ii = if g == 1 { (n - i) % n } else { i };
        (f ^ g) * n + (ii + j) % n
    })
}

/// Order `4k`: elements `a^i b^f` with `i < 2k`, indexed `f * 2k + i`.
fn dicyclic(k: usize, text: String) -> FiniteGroup {
    let n2 = 2 * k;
    let labels = (0..4 * k)
        .map(|x| {
            let (f, i) = (x / n2, x % n2);
            if f == 0 {
                power_label("a", i)
            } else if i == 0 {
                "b".to_string()
            } else {
                format!("{} b", power_label("a", i))
            }
        })
        .collect();
    FiniteGroup::from_fn(4 * k, labels, text, move |x, y| {
        let (f, i) = (x / n2, x % n2);
        let (g, j) = (y / n2, y % n2);
        if f == 0 {
            g * n2 + (i + j) % n2
        } else if g == 0 {
            n2 + (i + n2 - j) % n2
        } else {
            (i + n2 - j + k) % n2
        }
    })
}

/// `Z_q x| Z_m` acting by `b a b^-1 = a^alpha`:
/// `(a^i b^j)(a^i' b^j') = a^(i + alpha^j i') b^(j + j')`.
fn sd_cyclic(q: u64, m: u64, alpha: u64, text: String) -> FiniteGroup {
    let (qu, mu) = (q as usize, m as usize);
    let mut alpha_pow = vec![1u64; mu];
    for j in 1..mu {
        alpha_pow[j] = alpha_pow[j - 1] * alpha % q;
    }
    let labels = (0..qu * mu)
        .map(|x| {
            let (i, j) = (x / mu, x % mu);
            format!("({}, {})", power_label("a", i), power_label("b", j))
        })
        .collect();
    FiniteGroup::from_fn(qu * mu, labels, text, move |x, y| {
        let (i, j) = (x / mu, x % mu);
        let (i2, j2) = (y / mu, y % mu);
        let ni = (i as u64 + alpha_pow[j] * i2 as u64) % q;
        ni as usize * mu + (j + j2) % mu
    })
}

/// `(Z_p x Z_p) x| Z_m` with the complement acting by the companion matrix:
/// conjugation by `c` sends the vector `(x, y)` to `theta (x, y)`.
fn sd_elem_ab(p: u64, m: u64, beta: u64, text: String) -> FiniteGroup {
    let (pu, mu) = (p as usize, m as usize);
    let theta = Mat2::companion(p, beta);
    // action of c^j on normal-part indices, tabulated
    let mut act = vec![vec![0usize; pu * pu]; mu];
    for (j, row) in act.iter_mut().enumerate() {
        let tj = theta.pow(j as u64);
        for x in 0..pu {
            for y in 0..pu {
                let (nx, ny) = tj.apply(x as u64, y as u64);
                row[x * pu + y] = nx as usize * pu + ny as usize;
            }
        }
    }
    let vec_label = |v: usize| {
        let (x, y) = (v / pu, v % pu);
        match (x, y) {
            (0, 0) => "e".to_string(),
            (_, 0) => power_label("a", x),
            (0, _) => power_label("b", y),
            _ => format!("{} {}", power_label("a", x), power_label("b", y)),
        }
    };
    let labels = (0..pu * pu * mu)
        .map(|idx| {
            let (v, j) = (idx / mu, idx % mu);
            format!("({}, {})", vec_label(v), power_label("c", j))
        })
        .collect();
    FiniteGroup::from_fn(pu * pu * mu, labels, text, move |xx, yy| {
        let (v, j) = (xx / mu, xx % mu);
        let (w, j2) = (yy / mu, yy % mu);
        let tw = act[j][w];
        let (vx, vy) = (v / pu, v % pu);
        let (wx, wy) = (tw / pu, tw % pu);
        let nv = ((vx + wx) % pu) * pu + (vy + wy) % pu;
        nv * mu + (j + j2) % mu
    })
}

/// Breadth-first closure of permutation generators; elements are numbered in
/// discovery order starting from the identity; `mul(x, y)` composes as
/// "apply y's permutation, then x's".
fn perm_closure(
    degree: usize,
    gens: &[Vec<usize>],
    text: String,
    limits: &Limits,
) -> Result<FiniteGroup, Error> {
    let identity: Vec<usize> = (0..degree).collect();
    let mut elements = vec![identity.clone()];
    let mut index = std::collections::HashMap::new();
    index.insert(identity, 0usize);
    let mut head = 0;
    while head < elements.len() {
        let current = elements[head].clone();
        head += 1;
        for g in gens {
            // right multiplication: (current . g)(pt) = current[g[pt]]
            let next: Vec<usize> = (0..degree).map(|pt| current[g[pt]]).collect();
            if !index.contains_key(&next) {
                if elements.len() + 1 > limits.max_group_order {
                    return Err(Error::OrderBound {
                        order: elements.len() + 1,
                        bound: limits.max_group_order,
                    });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
            }
        }
    }
    let n = elements.len();
    let labels = elements.iter().map(|p| cycle_notation(p)).collect();
    Ok(FiniteGroup::from_fn(n, labels, text, |x, y| {
        let composed: Vec<usize> = (0..degree).map(|pt| elements[x][elements[y][pt]]).collect();
        index[&composed]
    }))
}

fn direct_product(a: &FiniteGroup, b: &FiniteGroup, text: String) -> FiniteGroup {
    let (na, nb) = (a.order(), b.order());
    let labels = (0..na * nb)
        .map(|x| format!("({}, {})", a.label(x / nb), b.label(x % nb)))
        .collect();
    FiniteGroup::from_fn(na * nb, labels, text, |x, y| {
        let (xa, xb) = (x / nb, x % nb);
        let (ya, yb) = (y / nb, y % nb);
        a.mul(xa, ya) * nb + b.mul(xb, yb)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spec::parse;

    fn g(text: &str) -> FiniteGroup {
        build(&parse(text).unwrap(), &Limits::default()).unwrap()
    }

    #[test]
    fn cyclic_law() {
        let z6 = g("C(6)");
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(z6.mul(i, j), (i + j) % 6);
            }
        }
        assert_eq!(z6.label(0), "e");
        assert_eq!(z6.label(2), "a^2");
    }

    #[test]
    fn trivial_group() {
        let z1 = g("C(1)");
        assert_eq!(z1.order(), 1);
        assert_eq!(z1.mul(0, 0), 0);
    }

    // Q8 has a unique element of order 2, namely a^2.
    #[test]
    fn dic2_is_quaternion() {
        let q8 = g("Dic(2)");
        assert_eq!(q8.order(), 8);
        let involutions: Vec<usize> =
            (0..8).filter(|&x| q8.element_order(x) == 2).collect();
        assert_eq!(involutions, vec![2]);
        assert_eq!(q8.element_order(2), 2);
    }

    #[test]
    fn dihedral_relations() {
        let d8 = g("D(8)");
        assert_eq!(d8.order(), 8);
        // r has order 4, s has order 2, s r s^-1 = r^-1
        let (r, s) = (1, 4);
        assert_eq!(d8.element_order(r), 4);
        assert_eq!(d8.element_order(s), 2);
        assert_eq!(d8.conjugate(s, r), d8.inv(r));
        // five involutions in D8
        assert_eq!((0..8).filter(|&x| d8.element_order(x) == 2).count(), 5);
    }

    #[test]
    fn sdc_realizes_presentation() {
        let s3 = g("SDC(3,2,2)");
        assert_eq!(s3.order(), 6);
        assert!(!s3.is_abelian());
        // a = (a, e) at index m = 2; b = (e, b) at index 1
        let (a, b) = (2, 1);
        assert_eq!(s3.element_order(a), 3);
        assert_eq!(s3.element_order(b), 2);
        assert_eq!(s3.conjugate(b, a), s3.pow(a, 2));

        let g136 = g("SDC(17,8,2)");
        let (a, b) = (8, 1);
        assert_eq!(g136.element_order(a), 17);
        assert_eq!(g136.element_order(b), 8);
        assert_eq!(g136.conjugate(b, a), g136.pow(a, 2));
        // the normal part is conjugation-stable
        let n = g136.closure(&[a]);
        assert_eq!(n.len(), 17);
        for gen in g136.generating_set() {
            for x in n.to_vec() {
                assert!(n.contains(g136.conjugate(gen, x)));
            }
        }
        assert_eq!(g136.closure(&[b]).len(), 8);
    }

    #[test]
    fn sde_realizes_presentation() {
        // A4 up to isomorphism: order 12, no element of order 4
        let a4 = g("SDE(2,3,1)");
        assert_eq!(a4.order(), 12);
        assert!(!a4.is_abelian());
        assert!((0..12).all(|x| a4.element_order(x) != 4));
        // c a c^-1 = b and c b c^-1 = a^-1 b^beta
        let p = 2usize;
        let m = 3usize;
        let a = (p) * m; // vector (1, 0)
        let b = m; // vector (0, 1)
        let c = 1;
        assert_eq!(a4.conjugate(c, a), b);
        assert_eq!(a4.conjugate(c, b), a4.mul(a4.inv(a), b)); // beta = 1

        // the order-27 group of exponent 3
        let h27 = g("SDE(3,3,2)");
        assert_eq!(h27.order(), 27);
        assert!(!h27.is_abelian());
        assert!((0..27).all(|x| x == 0 || h27.element_order(x) == 3));
    }

    #[test]
    fn perm_closures() {
        let s4 = g("Perm(4;(1 2),(1 2 3 4))");
        assert_eq!(s4.order(), 24);
        let a5 = g("Perm(5;(1 2 3),(1 2 3 4 5))");
        assert_eq!(a5.order(), 60);
        // Z9 x| Z3 on 9 points: order 27, exponent 9
        let w = g("Perm(9;(1 2 3 4 5 6 7 8 9),(2 5 8)(3 9 6))");
        assert_eq!(w.order(), 27);
        assert!(!w.is_abelian());
        assert_eq!((0..27).filter(|&x| w.element_order(x) == 9).count(), 18);
        assert_eq!(w.label(0), "(1)");
    }

    #[test]
    fn direct_product_order_and_commutativity() {
        let z24ish = g("C(8)*C(3)");
        assert_eq!(z24ish.order(), 24);
        assert!(z24ish.is_abelian());
        let mixed = g("D(8)*C(3)");
        assert_eq!(mixed.order(), 24);
        assert!(!mixed.is_abelian());
    }

    #[test]
    fn order_bound_is_enforced() {
        let spec = parse("C(70)*C(80)").unwrap();
        match build(&spec, &Limits::default()) {
            Err(Error::OrderBound { order, bound }) => {
                assert_eq!(order, 5600);
                assert_eq!(bound, 5000);
            }
            other => panic!("expected an order bound error, got {other:?}"),
        }
        let tight = Limits {
            max_group_order: 10,
            ..Limits::default()
        };
        assert!(matches!(
            build(&parse("Perm(4;(1 2),(1 2 3 4))").unwrap(), &tight),
            Err(Error::OrderBound { .. })
        ));
    }
}
