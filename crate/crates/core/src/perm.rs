//! Permutations of `{0, .., degree-1}` stored in image form.

use std::fmt;

use crate::error::{Error, Result};

/// A permutation of fixed degree; `images[i]` is the image of point `i`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u16>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u16).collect(),
        }
    }

    /// Builds a permutation from its image vector, checking bijectivity.
    pub fn from_images(images: Vec<u16>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &img in &images {
            if (img as usize) >= n || seen[img as usize] {
                return Err(Error::Parse {
                    line: 0,
                    message: "image vector is not a bijection".into(),
                });
            }
            seen[img as usize] = true;
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img as usize)
    }

    /// Composition `self . other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: other.images.iter().map(|&m| self.images[m as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u16; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u16;
        }
        Permutation { images }
    }

    /// Least `n >= 1` with `self^n = identity`: the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_lengths()
            .into_iter()
            .fold(1u64, |acc, len| num::integer::lcm(acc, len as u64))
    }

    pub fn pow(&self, n: i64) -> Permutation {
        let mut base = if n < 0 { self.inverse() } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Permutation::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = base.compose(&acc);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    fn cycle_lengths(&self) -> Vec<usize> {
        let mut seen = vec![false; self.degree()];
        let mut lengths = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                p = self.apply(p);
                len += 1;
            }
            lengths.push(len);
        }
        lengths
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            if cycle.len() > 1 {
                cycles.push(cycle);
            }
        }
        cycles
    }

    /// Disjoint-cycle notation, e.g. `(0 1)(2 3 4)`; the identity prints as `()`.
    pub fn cycle_notation(&self) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        cycles
            .iter()
            .map(|c| {
                let body = c.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" ");
                format!("({body})")
            })
            .collect()
    }

    /// Parses disjoint-cycle notation such as `(0 1)(2 3 4)`. Points may be
    /// separated by spaces or commas; `()` is the identity.
    pub fn parse_cycles(text: &str, degree: usize) -> Result<Self> {
        let err = |message: &str| Error::Parse {
            line: 0,
            message: message.into(),
        };
        let mut images: Vec<u16> = (0..degree as u16).collect();
        let mut moved = vec![false; degree];
        let mut rest = text.trim();
        if rest.is_empty() {
            return Err(err("empty permutation"));
        }
        while !rest.is_empty() {
            if !rest.starts_with('(') {
                return Err(err("expected `(`"));
            }
            let close = rest.find(')').ok_or_else(|| err("unclosed cycle"))?;
            let body = &rest[1..close];
            let points: Vec<usize> = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    s.parse::<usize>()
                        .map_err(|_| err(&format!("invalid point `{s}`")))
                })
                .collect::<Result<_>>()?;
            for &p in &points {
                if p >= degree {
                    return Err(err(&format!("point {p} exceeds degree {degree}")));
                }
                if moved[p] {
                    return Err(err(&format!("point {p} repeated")));
                }
                moved[p] = true;
            }
            for (i, &p) in points.iter().enumerate() {
                images[p] = points[(i + 1) % points.len()] as u16;
            }
            rest = rest[close + 1..].trim_start();
        }
        Permutation::from_images(images)
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation())
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.cycle_notation())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print_round_trip() {
        let p = Permutation::parse_cycles("(0 1)(2 3 4)", 5).unwrap();
        assert_eq!(p.cycle_notation(), "(0 1)(2 3 4)");
        assert_eq!(p.apply(0), 1);
        assert_eq!(p.apply(2), 3);
        assert_eq!(p.apply(4), 2);
    }

    #[test]
    fn identity_order_one() {
        assert_eq!(Permutation::identity(4).order(), 1);
        assert_eq!(Permutation::identity(4).cycle_notation(), "()");
    }

    #[test]
    fn transposition_order_two() {
        let p = Permutation::parse_cycles("(0 1)", 3).unwrap();
        assert_eq!(p.order(), 2);
    }

    #[test]
    fn mixed_cycle_order_six() {
        let p = Permutation::parse_cycles("(0 1)(2 3 4)", 5).unwrap();
        assert_eq!(p.order(), 6);
        assert!(p.pow(6).is_identity());
        assert!(!p.pow(3).is_identity());
    }

    #[test]
    fn compose_applies_right_factor_first() {
        let a = Permutation::parse_cycles("(0 1)", 3).unwrap();
        let b = Permutation::parse_cycles("(1 2)", 3).unwrap();
        // (a . b)(1) = a(b(1)) = a(2) = 2
        assert_eq!(a.compose(&b).apply(1), 2);
    }

    #[test]
    fn inverse_composes_to_identity() {
        let p = Permutation::parse_cycles("(0 1 2 3)", 4).unwrap();
        assert!(p.compose(&p.inverse()).is_identity());
        assert!(p.inverse().compose(&p).is_identity());
    }

    #[test]
    fn rejects_bad_input() {
        assert!(Permutation::parse_cycles("(0 1", 3).is_err());
        assert!(Permutation::parse_cycles("(0 1)(1 2)", 3).is_err());
        assert!(Permutation::parse_cycles("(0 5)", 3).is_err());
        assert!(Permutation::from_images(vec![0, 0]).is_err());
    }
}
