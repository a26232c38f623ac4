//! Registry names accepted on the command line.

use std::path::Path;

use super::{
    complete_intersection, elliptic_quartic, grassmann_g14_section, scroll, segre, veronese, SectionRingProfile,
    Variety,
};
use crate::error::{Error, Result};
use crate::groebner::Ideal;
use crate::polyring::IdealFile;

fn numbers(text: &str, sep: char) -> Result<Vec<usize>> {
    text.split(sep)
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|_| Error::invalid(format!("expected a number, found `{t}`")))
        })
        .collect()
}

fn pair(text: &str) -> Result<(usize, usize)> {
    match numbers(text, ',')?[..] {
        [a, b] => Ok((a, b)),
        _ => Err(Error::invalid(format!("expected two numbers, found `{text}`"))),
    }
}

/// Builds a variety from `veronese:n,d`, `segre:a,b`, `scroll:a1+a2+...`,
/// `g14:cut`, `quadric:r`, `elliptic-quartic`, `ci:file.ideal` or `file:path.ideal`.
/// `seed` drives the random hyperplanes of `g14` sections.
pub fn parse_variety_spec(spec: &str, seed: u64) -> Result<Variety> {
    let (kind, arg) = spec.split_once(':').unwrap_or((spec, ""));
    let v = match kind.trim() {
        "veronese" => {
            let (n, d) = pair(arg)?;
            veronese(n, d)?
        }
        "segre" => {
            let (a, b) = pair(arg)?;
            segre(a, b)?
        }
        "scroll" => scroll(&numbers(arg, '+')?)?,
        "twisted-cubic" => scroll(&[3])?.with_name("twisted-cubic"),
        "g14" => {
            let cut = arg.trim().parse().map_err(|_| Error::invalid(format!("bad cut `{arg}`")))?;
            grassmann_g14_section(cut, seed)?
        }
        "quadric" => {
            let r: usize = arg.trim().parse().map_err(|_| Error::invalid(format!("bad dimension `{arg}`")))?;
            quadric_hypersurface(r)?
        }
        "elliptic-quartic" => elliptic_quartic()?,
        "ci" => {
            let f = IdealFile::read(Path::new(arg))?;
            complete_intersection(f.polys)?.with_name(spec)
        }
        "file" => {
            let f = IdealFile::read(Path::new(arg))?;
            Variety::from_ideal(spec, Ideal::new(&f.ring, f.polys)?)?
        }
        _ => return Err(Error::invalid(format!("unknown variety `{spec}`"))),
    };
    Ok(v)
}

/// The smooth quadric `x0 x1 + x2 x3 + ...` (plus `x_r^2` when `r` is even) in `P^r`.
pub fn quadric_hypersurface(r: usize) -> Result<Variety> {
    use crate::polyring::{Field, PolynomialRing, RingExt};
    if !(2..=12).contains(&r) {
        return Err(Error::invalid("quadric needs 2 <= r <= 12"));
    }
    let ring = PolynomialRing::standard(r + 1, Field::Rational);
    let mut q = ring.zero();
    let mut k = 0;
    while k + 1 <= r {
        q = q.add(&ring.var(k).mul(&ring.var(k + 1)));
        k += 2;
    }
    if k == r {
        q = q.add(&ring.var(r).pow(2));
    }
    Ok(complete_intersection(vec![q])?
        .with_name(&format!("quadric({r})"))
        .with_profile(SectionRingProfile::Hypersurface { r: r as u32, d: 2 })
        .with_claim("N2", true, "quadric hypersurfaces have minimal degree"))
}
