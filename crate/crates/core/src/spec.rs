//! The group spec language.
//!
//! ```text
//! Spec  := Atom { "*" Atom }                      (left-associative direct product)
//! Atom  := "C(" INT ")" | "D(" INT ")" | "Dic(" INT ")"
//!        | "SDC(" INT "," INT "," INT ")" | "SDE(" INT "," INT "," INT ")"
//!        | "Perm(" INT ";" CYCLES { "," CYCLES } ")"
//! ```
//!
//! `CYCLES` is standard cycle notation with 1-based points, e.g. `(1 2)(3 4)`;
//! whitespace separates points and is otherwise insignificant. `D(m)` is the
//! dihedral group of order `m`, `Dic(k)` the dicyclic group of order `4k`.

use crate::arith::{self, Mat2};
use crate::error::Error;
use std::fmt;
use std::str::FromStr;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    /// `C(n)`: cyclic group of order `n >= 1`.
    Cyclic(u64),
    /// `D(m)`: dihedral group of order `m` (`m` even, `m >= 4`).
    Dihedral(u64),
    /// `Dic(k)`: dicyclic group `<a, b | a^2k = 1, b^2 = a^k, b a b^-1 = a^-1>`
    /// of order `4k` (`k >= 2`); `Dic(2)` is Q8, `Dic(4)` is Q16.
    Dicyclic(u64),
    /// `SDC(q, m, alpha)`: `Z_q x| Z_m` with `b a b^-1 = a^alpha`; requires
    /// `q` prime, `gcd(alpha, q) = 1` and `alpha^m = 1 (mod q)`.
    SdCyclic { q: u64, m: u64, alpha: u64 },
    /// `SDE(p, m, beta)`: `(Z_p x Z_p) x| Z_m` where the complement generator
    /// acts by the companion matrix `theta = [[0, -1], [1, beta]]` over `Z_p`;
    /// requires `p` prime and `theta^m = I`.
    SdElemAb { p: u64, m: u64, beta: u64 },
    /// `Perm(degree; gens)`: closure of permutation generators on
    /// `degree <= 12` points. Each generator is stored as a 0-based map.
    PermClosure { degree: u64, gens: Vec<Vec<usize>> },
    /// `A*B`: direct product, numbered with the left factor major.
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
}

pub const MAX_PERM_DEGREE: u64 = 12;

impl GroupSpec {
    /// Order of the group this spec describes. `PermClosure` orders are not
    /// known before building; those return `None`.
    pub fn known_order(&self) -> Option<u64> {
        match self {
            GroupSpec::Cyclic(n) => Some(*n),
            GroupSpec::Dihedral(m) => Some(*m),
            GroupSpec::Dicyclic(k) => Some(4 * k),
            GroupSpec::SdCyclic { q, m, .. } => Some(q * m),
            GroupSpec::SdElemAb { p, m, .. } => Some(p * p * m),
            GroupSpec::PermClosure { .. } => None,
            GroupSpec::DirectProduct(a, b) => Some(a.known_order()? * b.known_order()?),
        }
    }

    /// Validate the parameter invariants of every atom.
    pub fn validate(&self) -> Result<(), Error> {
        match self {
            GroupSpec::Cyclic(n) => {
                if *n == 0 {
                    return Err(Error::InvalidParameter("C(n) requires n >= 1".into()));
                }
            }
            GroupSpec::Dihedral(m) => {
                if *m < 4 || *m % 2 != 0 {
                    return Err(Error::InvalidParameter(format!(
                        "D({m}) is not valid: the order must be even and at least 4"
                    )));
                }
            }
            GroupSpec::Dicyclic(k) => {
                if *k < 2 {
                    return Err(Error::InvalidParameter(format!(
                        "Dic({k}) is not valid: k must be at least 2"
                    )));
                }
            }
            GroupSpec::SdCyclic { q, m, alpha } => {
                if !arith::is_prime(*q) {
                    return Err(Error::InvalidParameter(format!(
                        "SDC({q},{m},{alpha}): {q} is not prime"
                    )));
                }
                if *m == 0 {
                    return Err(Error::InvalidParameter(format!(
                        "SDC({q},{m},{alpha}): m must be at least 1"
                    )));
                }
                if arith::gcd(*alpha, *q) != 1 {
                    return Err(Error::InvalidParameter(format!(
                        "SDC({q},{m},{alpha}): alpha is not coprime to {q}"
                    )));
                }
                if arith::mod_pow(*alpha, *m, *q) != 1 {
                    return Err(Error::InvalidParameter(format!(
                        "SDC({q},{m},{alpha}): alpha^{m} is not 1 mod {q}"
                    )));
                }
            }
            GroupSpec::SdElemAb { p, m, beta } => {
                if !arith::is_prime(*p) {
                    return Err(Error::InvalidParameter(format!(
                        "SDE({p},{m},{beta}): {p} is not prime"
                    )));
                }
                if *m == 0 {
                    return Err(Error::InvalidParameter(format!(
                        "SDE({p},{m},{beta}): m must be at least 1"
                    )));
                }
                if *beta >= *p {
                    return Err(Error::InvalidParameter(format!(
                        "SDE({p},{m},{beta}): beta must lie in [0, {})",
                        p
                    )));
                }
                let theta = Mat2::companion(*p, *beta);
                if theta.pow(*m) != Mat2::identity(*p) {
                    return Err(Error::InvalidParameter(format!(
                        "SDE({p},{m},{beta}): theta^{m} is not the identity matrix"
                    )));
                }
            }
            GroupSpec::PermClosure { degree, gens } => {
                if *degree == 0 || *degree > MAX_PERM_DEGREE {
                    return Err(Error::InvalidParameter(format!(
                        "Perm degree {degree} is outside 1..={MAX_PERM_DEGREE}"
                    )));
                }
                for g in gens {
                    if g.len() != *degree as usize {
                        return Err(Error::InvalidPermutation(format!(
                            "generator acts on {} points, expected {degree}",
                            g.len()
                        )));
                    }
                    let mut seen = vec![false; g.len()];
                    for &img in g {
                        if img >= g.len() || seen[img] {
                            return Err(Error::InvalidPermutation(
                                "generator map is not a bijection".into(),
                            ));
                        }
                        seen[img] = true;
                    }
                }
            }
            GroupSpec::DirectProduct(a, b) => {
                a.validate()?;
                b.validate()?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "C({n})"),
            GroupSpec::Dihedral(m) => write!(f, "D({m})"),
            GroupSpec::Dicyclic(k) => write!(f, "Dic({k})"),
            GroupSpec::SdCyclic { q, m, alpha } => write!(f, "SDC({q},{m},{alpha})"),
            GroupSpec::SdElemAb { p, m, beta } => write!(f, "SDE({p},{m},{beta})"),
            GroupSpec::PermClosure { degree, gens } => {
                write!(f, "Perm({degree};")?;
                for (i, g) in gens.iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{}", cycle_notation(g))?;
                }
                write!(f, ")")
            }
            GroupSpec::DirectProduct(a, b) => write!(f, "{a}*{b}"),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        parse(s)
    }
}

/// Disjoint-cycle form of a 0-based permutation map, printed with 1-based
/// points; the identity prints as `(1)`.
pub fn cycle_notation(map: &[usize]) -> String {
    let mut seen = vec![false; map.len()];
    let mut out = String::new();
    for start in 0..map.len() {
        if seen[start] || map[start] == start {
            seen[start] = true;
            continue;
        }
        out.push('(');
        let mut x = start;
        let mut first = true;
        while !seen[x] {
            seen[x] = true;
            if !first {
                out.push(' ');
            }
            out.push_str(&(x + 1).to_string());
            first = false;
            x = map[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        out.push_str("(1)");
    }
    out
}

/// Parse a spec string. Errors carry the byte position and the tokens that
/// would have been accepted there.
pub fn parse(text: &str) -> Result<GroupSpec, Error> {
    let mut p = Parser::new(text);
    let spec = p.parse_spec()?;
    p.expect_end()?;
    spec.validate()?;
    Ok(spec)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(text: &'a str) -> Self {
        Parser {
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.bytes.get(self.pos).copied()
    }

    fn err(&self, expected: &str) -> Error {
        let found = match self.bytes.get(self.pos) {
            Some(&b) => format!("{:?}", b as char),
            None => "end of input".into(),
        };
        Error::Syntax {
            position: self.pos,
            expected: expected.into(),
            found,
        }
    }

    fn eat(&mut self, b: u8, expected: &str) -> Result<(), Error> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(expected))
        }
    }

    fn parse_int(&mut self) -> Result<u64, Error> {
        match self.peek() {
            Some(b) if b.is_ascii_digit() => {}
            _ => return Err(self.err("an integer")),
        }
        let start = self.pos;
        let mut value: u64 = 0;
        while let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_digit() {
                break;
            }
            value = value
                .checked_mul(10)
                .and_then(|v| v.checked_add((b - b'0') as u64))
                .ok_or_else(|| Error::Syntax {
                    position: start,
                    expected: "an integer small enough to be a group parameter".into(),
                    found: "overflowing literal".into(),
                })?;
            self.pos += 1;
        }
        Ok(value)
    }

    fn parse_word(&mut self) -> Result<(usize, String), Error> {
        match self.peek() {
            Some(b) if b.is_ascii_alphabetic() => {}
            _ => return Err(self.err("a constructor name (C, D, Dic, SDC, SDE, Perm)")),
        }
        let start = self.pos;
        while let Some(&b) = self.bytes.get(self.pos) {
            if !b.is_ascii_alphabetic() {
                break;
            }
            self.pos += 1;
        }
        let word = std::str::from_utf8(&self.bytes[start..self.pos])
            .expect("ascii")
            .to_string();
        Ok((start, word))
    }

    fn parse_spec(&mut self) -> Result<GroupSpec, Error> {
        let mut acc = self.parse_atom()?;
        while self.peek() == Some(b'*') {
            self.pos += 1;
            let rhs = self.parse_atom()?;
            acc = GroupSpec::DirectProduct(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn parse_atom(&mut self) -> Result<GroupSpec, Error> {
        let (word_pos, word) = self.parse_word()?;
        match word.as_str() {
            "C" | "D" | "Dic" => {
                self.eat(b'(', "'('")?;
                let n = self.parse_int()?;
                self.eat(b')', "')'")?;
                Ok(match word.as_str() {
                    "C" => GroupSpec::Cyclic(n),
                    "D" => GroupSpec::Dihedral(n),
                    _ => GroupSpec::Dicyclic(n),
                })
            }
            "SDC" | "SDE" => {
                self.eat(b'(', "'('")?;
                let a = self.parse_int()?;
                self.eat(b',', "','")?;
                let b = self.parse_int()?;
                self.eat(b',', "','")?;
                let c = self.parse_int()?;
                self.eat(b')', "')'")?;
                Ok(if word == "SDC" {
                    GroupSpec::SdCyclic { q: a, m: b, alpha: c }
                } else {
                    GroupSpec::SdElemAb { p: a, m: b, beta: c }
                })
            }
            "Perm" => {
                self.eat(b'(', "'('")?;
                let degree = self.parse_int()?;
                if degree == 0 || degree > MAX_PERM_DEGREE {
                    return Err(Error::InvalidParameter(format!(
                        "Perm degree {degree} is outside 1..={MAX_PERM_DEGREE}"
                    )));
                }
                self.eat(b';', "';'")?;
                let mut gens = Vec::new();
                loop {
                    gens.push(self.parse_generator(degree as usize)?);
                    match self.peek() {
                        Some(b',') => {
                            self.pos += 1;
                        }
                        Some(b')') => {
                            self.pos += 1;
                            break;
                        }
                        _ => return Err(self.err("',' or ')'")),
                    }
                }
                Ok(GroupSpec::PermClosure { degree, gens })
            }
            _ => Err(Error::Syntax {
                position: word_pos,
                expected: "one of C, D, Dic, SDC, SDE, Perm".into(),
                found: format!("{word:?}"),
            }),
        }
    }

    /// One generator: a juxtaposed product of cycles, applied right to left.
    fn parse_generator(&mut self, degree: usize) -> Result<Vec<usize>, Error> {
        let mut cycles = Vec::new();
        loop {
            cycles.push(self.parse_cycle(degree)?);
            if self.peek() != Some(b'(') {
                break;
            }
        }
        let mut map: Vec<usize> = (0..degree).collect();
        for cycle in cycles.iter().rev() {
            // compose: new(x) = rest-so-far applied first, this cycle last
            let mut step: Vec<usize> = (0..degree).collect();
            for w in cycle.windows(2) {
                step[w[0]] = w[1];
            }
            if cycle.len() > 1 {
                step[cycle[cycle.len() - 1]] = cycle[0];
            }
            map = map.into_iter().map(|x| step[x]).collect();
        }
        Ok(map)
    }

    fn parse_cycle(&mut self, degree: usize) -> Result<Vec<usize>, Error> {
        self.eat(b'(', "'(' starting a cycle")?;
        let mut points = Vec::new();
        loop {
            let at = {
                self.skip_ws();
                self.pos
            };
            let point = self.parse_int()?;
            if point == 0 || point > degree as u64 {
                return Err(Error::Syntax {
                    position: at,
                    expected: format!("a point in 1..={degree}"),
                    found: point.to_string(),
                });
            }
            let point = point as usize - 1;
            if points.contains(&point) {
                return Err(Error::InvalidPermutation(format!(
                    "point {} repeats within one cycle",
                    point + 1
                )));
            }
            points.push(point);
            match self.peek() {
                Some(b')') => {
                    self.pos += 1;
                    return Ok(points);
                }
                Some(b) if b.is_ascii_digit() => continue,
                _ => return Err(self.err("a point or ')'")),
            }
        }
    }

    fn expect_end(&mut self) -> Result<(), Error> {
        if self.peek().is_none() {
            Ok(())
        } else {
            Err(self.err("'*' or end of input"))
        }
    }
}
