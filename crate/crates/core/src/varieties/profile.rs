//! Closed forms for `j -> h0(X, O_X(j))` of the corpus families.

use serde::Serialize;

use crate::hilbert::binomial;

/// The function `j -> h0(O_X(j))` in closed form.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum SectionRingProfile {
    /// `ν_d(P^n)`: `C(n + dj, n)`.
    Veronese { n: u32, d: u32 },
    /// `P^a × P^b`: `C(a+j, a) C(b+j, b)`.
    Segre { a: u32, b: u32 },
    /// `S(a_1, ..., a_k)`: `Σ_{j_1+...+j_k = j} (a_1 j_1 + ... + a_k j_k + 1)`.
    Scroll(Vec<u32>),
    /// A hypersurface of degree `d` in `P^r`.
    Hypersurface { r: u32, d: u32 },
    /// `G(1,4)` cut by `cut` general hyperplanes.
    GrassmannSection { cut: u32 },
    /// Image of a projection with secant locus of dimension `s` (`-1` when empty):
    /// `h0(O_X(j)) - C(s+j-1, s)` for `j >= 1`.
    Projected { base: Box<SectionRingProfile>, s: i64 },
}

fn g14(j: i64) -> i64 {
    if j < 0 {
        return 0;
    }
    (j + 1) * (j + 2) * (j + 2) * (j + 3) * (j + 3) * (j + 4) / 144
}

fn compositions_sum(a: &[u32], j: u32) -> i64 {
    fn rec(a: &[u32], left: u32, acc: i64) -> i64 {
        match a {
            [] => 0,
            [last] => acc + (*last as i64) * left as i64 + 1,
            [first, rest @ ..] => (0..=left)
                .map(|e| rec(rest, left - e, acc + (*first as i64) * e as i64))
                .sum(),
        }
    }
    rec(a, j, 0)
}

impl SectionRingProfile {
    pub fn h0(&self, j: u32) -> u64 {
        let ji = j as i64;
        let v = match self {
            SectionRingProfile::Veronese { n, d } => binomial(*n as i64 + (*d as i64) * ji, *n as i64),
            SectionRingProfile::Segre { a, b } => {
                binomial(*a as i64 + ji, *a as i64) * binomial(*b as i64 + ji, *b as i64)
            }
            SectionRingProfile::Scroll(a) => compositions_sum(a, j),
            SectionRingProfile::Hypersurface { r, d } => {
                let r = *r as i64;
                binomial(r + ji, r) - if ji >= *d as i64 { binomial(r + ji - *d as i64, r) } else { 0 }
            }
            SectionRingProfile::GrassmannSection { cut } => (0..=*cut as i64)
                .map(|i| {
                    let sign = if i % 2 == 0 { 1 } else { -1 };
                    sign * binomial(*cut as i64, i) * g14(ji - i)
                })
                .sum(),
            SectionRingProfile::Projected { base, s } => {
                let h = base.h0(j) as i64;
                if j == 0 {
                    h
                } else {
                    h - binomial(s + ji - 1, *s)
                }
            }
        };
        v.max(0) as u64
    }

    /// Whether `h0` agrees with the Hilbert function of the saturated ideal in every degree.
    pub fn projectively_normal(&self) -> bool {
        !matches!(self, SectionRingProfile::Projected { .. })
    }

    pub fn projected(&self, s: i64) -> SectionRingProfile {
        SectionRingProfile::Projected {
            base: Box::new(self.clone()),
            s,
        }
    }
}
