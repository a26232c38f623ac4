//! Secant and tangent varieties by elimination.

use serde::Serialize;

use crate::error::Result;
use crate::groebner::{extend_ring, Ideal};
use crate::polyring::{Polynomial, RingExt};
use crate::varieties::Variety;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum JoinKind {
    Secant,
    Tangent,
}

/// `Sec(X)` or `Tan(X)`. With a parametrization `φ` the cone is the image of
/// `(s, t) -> φ(s) + φ(t)`, respectively `(s, u) -> Σ u_k ∂φ/∂s_k (s)`;
/// otherwise `Sec` is the join `I(u) + I(x - u)` and `Tan` is cut out by
/// `u ∈ X`, `J(u) x = 0` away from `u = 0`, with `u` eliminated.
pub fn ruled_join_variety(x: &Variety, kind: JoinKind) -> Result<Ideal> {
    let ring = x.ring();
    let n = ring.nvars();
    let field = x.field();
    let param = match x.parametrization() {
        Some(p) if p.source_ring.field() == field => Some(p.clone()),
        Some(p) => Some(p.change_field(field)?),
        None => None,
    };
    let (big, gens, extra) = match (param, kind) {
        (Some(p), JoinKind::Secant) => {
            let m = p.source_ring.nvars();
            let big = extend_ring(ring, 2 * m, "u");
            let first: Vec<usize> = (n..n + m).collect();
            let second: Vec<usize> = (n + m..n + 2 * m).collect();
            let gens = p
                .forms
                .iter()
                .enumerate()
                .map(|(i, f)| big.var(i).sub(&f.remap(&big, &first)).sub(&f.remap(&big, &second)))
                .collect();
            (big, gens, 2 * m)
        }
        (Some(p), JoinKind::Tangent) => {
            let m = p.source_ring.nvars();
            let big = extend_ring(ring, 2 * m, "u");
            let src: Vec<usize> = (n..n + m).collect();
            let gens = p
                .forms
                .iter()
                .enumerate()
                .map(|(i, f)| {
                    let dir = (0..m).fold(big.zero(), |acc, k| {
                        acc.add(&f.derivative(k).remap(&big, &src).mul(&big.var(n + m + k)))
                    });
                    big.var(i).sub(&dir)
                })
                .collect();
            (big, gens, 2 * m)
        }
        (None, JoinKind::Secant) => {
            let big = extend_ring(ring, n, "u");
            let u: Vec<usize> = (n..2 * n).collect();
            let diff: Vec<Polynomial> = (0..n).map(|k| big.var(k).sub(&big.var(n + k))).collect();
            let mut gens: Vec<Polynomial> = x.ideal().gens().iter().map(|f| f.remap(&big, &u)).collect();
            gens.extend(x.ideal().gens().iter().map(|f| f.compose(&diff)));
            (big, gens, n)
        }
        (None, JoinKind::Tangent) => {
            let big = extend_ring(ring, n, "u");
            let u: Vec<usize> = (n..2 * n).collect();
            let mut gens: Vec<Polynomial> = x.ideal().gens().iter().map(|f| f.remap(&big, &u)).collect();
            for f in x.ideal().gens() {
                let lin = (0..n).fold(big.zero(), |acc, k| acc.add(&f.derivative(k).remap(&big, &u).mul(&big.var(k))));
                if !lin.is_zero() {
                    gens.push(lin);
                }
            }
            let cone = Ideal::new(&big, gens)?;
            let vertex = Ideal::new(&big, (n..2 * n).map(|k| big.var(k)).collect())?;
            let sat = cone.saturate(&vertex)?;
            (big, sat.gens().to_vec(), n)
        }
    };
    let graph = Ideal::new(&big, gens)?;
    let image = graph.eliminate(extra)?;
    let keep: Vec<usize> = (0..n).collect();
    let gens = image.gens().iter().map(|g| g.remap(ring, &keep)).collect();
    Ok(Ideal::new(ring, gens)?.minimalized()?.mark_saturated())
}
