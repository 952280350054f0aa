//! Modular arithmetic and the 2x2 companion-matrix searches used to pick
//! semidirect-product parameters.

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub fn mod_pow(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1u64 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}

/// Multiplicative order of `a` modulo `q`, or `None` when `gcd(a, q) != 1`.
pub fn mult_order(a: u64, q: u64) -> Option<u64> {
    if q == 0 || gcd(a % q, q) != 1 {
        return None;
    }
    let mut k = 1;
    let mut acc = a % q;
    while acc != 1 {
        acc = acc * (a % q) % q;
        k += 1;
    }
    Some(k)
}

/// Smallest alpha in `[2, q-1]` of multiplicative order exactly `m` modulo the
/// prime `q`, or `None` when no residue has that order (i.e. `m` does not
/// divide `q - 1`).
pub fn find_alpha(q: u64, m: u64) -> Option<u64> {
    debug_assert!(is_prime(q));
    if m == 0 || !(q - 1).is_multiple_of(m) {
        return None;
    }
    (2..q).find(|&a| mult_order(a, q) == Some(m))
}

/// A 2x2 matrix over `Z_p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mat2 {
    pub p: u64,
    pub a: [[u64; 2]; 2],
}

impl Mat2 {
    pub fn identity(p: u64) -> Self {
        Mat2 {
            p,
            a: [[1 % p, 0], [0, 1 % p]],
        }
    }

    /// The companion matrix `[[0, -1], [1, beta]]` of `x^2 - beta*x + 1`.
    pub fn companion(p: u64, beta: u64) -> Self {
        Mat2 {
            p,
            a: [[0, (p - 1) % p], [1 % p, beta % p]],
        }
    }

    pub fn mul(&self, other: &Mat2) -> Mat2 {
        debug_assert_eq!(self.p, other.p);
        let p = self.p;
        let mut out = [[0u64; 2]; 2];
        for (i, row) in out.iter_mut().enumerate() {
            for (j, cell) in row.iter_mut().enumerate() {
                *cell = (self.a[i][0] * other.a[0][j] + self.a[i][1] * other.a[1][j]) % p;
            }
        }
        Mat2 { p, a: out }
    }

    pub fn pow(&self, e: u64) -> Mat2 {
        let mut acc = Mat2::identity(self.p);
        let mut base = *self;
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Order in `GL(2, Z_p)`, or `None` if the matrix is singular or the
    /// order exceeds `cap`.
    pub fn order(&self, cap: u64) -> Option<u64> {
        let det = (self.a[0][0] * self.a[1][1] + self.p * self.p
            - self.a[0][1] * self.a[1][0])
            % self.p;
        if det == 0 {
            return None;
        }
        let id = Mat2::identity(self.p);
        let mut acc = *self;
        for k in 1..=cap {
            if acc == id {
                return Some(k);
            }
            acc = acc.mul(self);
        }
        None
    }

    /// True when some lambda in `Z_p` satisfies `det(M - lambda*I) = 0`.
    pub fn has_eigenvalue(&self) -> bool {
        let p = self.p;
        (0..p).any(|lam| {
            let d00 = (self.a[0][0] + p - lam) % p;
            let d11 = (self.a[1][1] + p - lam) % p;
            (d00 * d11 + p * p - self.a[0][1] * self.a[1][0]).is_multiple_of(p)
        })
    }

    /// Apply to a column vector `(x, y)` over `Z_p`.
    pub fn apply(&self, x: u64, y: u64) -> (u64, u64) {
        (
            (self.a[0][0] * x + self.a[0][1] * y) % self.p,
            (self.a[1][0] * x + self.a[1][1] * y) % self.p,
        )
    }
}

/// Smallest beta in `[0, p-1]` whose companion matrix has order exactly `m`
/// in `GL(2, Z_p)`, with no eigenvalue condition imposed.
pub fn smallest_beta_with_order(p: u64, m: u64) -> Option<u64> {
    (0..p).find(|&beta| Mat2::companion(p, beta).order(4 * p * p) == Some(m))
}

/// Smallest beta in `[0, p-1]` such that the companion matrix `theta` of
/// `x^2 - beta*x + 1` over `Z_p` has order exactly `m = q^k` in `GL(2, Z_p)`
/// and `theta^(m/q)` has no eigenvalue in `Z_p` (for `k = 1` this is `theta`
/// itself). Returns `None` when no beta qualifies.
pub fn find_beta(p: u64, m: u64) -> Option<u64> {
    debug_assert!(is_prime(p));
    let q = prime_root_of_power(m)?;
    (0..p).find(|&beta| {
        let theta = Mat2::companion(p, beta);
        theta.order(4 * p * p) == Some(m) && !theta.pow(m / q).has_eigenvalue()
    })
}

/// For `m = q^k` with `q` prime and `k` in `{1, 2}`, returns `q`.
fn prime_root_of_power(m: u64) -> Option<u64> {
    if is_prime(m) {
        return Some(m);
    }
    let r = (m as f64).sqrt().round() as u64;
    if r * r == m && is_prime(r) {
        return Some(r);
    }
    None
}

pub fn primes_upto(n: u64) -> Vec<u64> {
    (2..=n).filter(|&k| is_prime(k)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(17));
        assert!(!is_prime(1));
        assert!(!is_prime(91));
        assert_eq!(primes_upto(20), vec![2, 3, 5, 7, 11, 13, 17, 19]);
    }

    #[test]
    fn orders_mod_q() {
        assert_eq!(mult_order(2, 17), Some(8));
        assert_eq!(mult_order(3, 7), Some(6));
        assert_eq!(mult_order(4, 9), Some(3));
        assert_eq!(mult_order(3, 9), None);
    }

    // ord_17(2) = 8 since 2^8 = 256 = 15*17 + 1.
    #[test]
    fn alpha_search() {
        assert_eq!(find_alpha(17, 8), Some(2));
        assert_eq!(find_alpha(7, 6), Some(3));
        // 3 does not divide 4 = q - 1, so no residue has order 3.
        assert_eq!(find_alpha(5, 3), None);
        assert_eq!(find_alpha(5, 2), Some(4));
        assert_eq!(find_alpha(7, 3), Some(2));
        assert_eq!(find_alpha(7, 2), Some(6));
        assert_eq!(find_alpha(13, 4), Some(5));
        assert_eq!(find_alpha(7, 6), Some(3));
    }

    #[test]
    fn companion_matrix_orders() {
        // Over Z_2 with beta = 1 the characteristic polynomial x^2 + x + 1 is
        // irreducible and theta has order 3.
        let t = Mat2::companion(2, 1);
        assert_eq!(t.order(100), Some(3));
        assert!(!t.has_eigenvalue());
        // beta = 0 over Z_3: theta^2 = -I, order 4.
        let t = Mat2::companion(3, 0);
        assert_eq!(t.order(100), Some(4));
        assert_eq!(t.pow(2).a, [[2, 0], [0, 2]]);
    }

    #[test]
    fn beta_search() {
        assert_eq!(find_beta(2, 3), Some(1));
        // Any order-4 theta over Z_3 has theta^2 = -I with eigenvalue -1.
        assert_eq!(find_beta(3, 4), None);
        assert_eq!(find_beta(5, 3), Some(4));
        // Regression constant: beta = 7 satisfies beta^3 - 3*beta + 1 = 0
        // (mod 17), the trace equation for an element of order 9.
        assert_eq!(find_beta(17, 9), Some(7));
        // q = 2 never qualifies: an order-2 element of SL(2,p) is -I.
        assert_eq!(find_beta(3, 2), None);
        assert_eq!(find_beta(11, 4), None);
    }

    #[test]
    fn beta_with_order_only() {
        // Over Z_3 the companion orders for beta = 0, 1, 2 are 4, 6, 3; the
        // order-27 family uses beta = 2.
        assert_eq!(smallest_beta_with_order(3, 3), Some(2));
        assert_eq!(smallest_beta_with_order(3, 4), Some(0));
    }
}
