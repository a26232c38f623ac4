//! The ideal file format: `ring:` and `field:` headers, then one polynomial per line.

use std::fmt::Write as _;
use std::sync::Arc;

use super::{parse_poly, Field, Polynomial, PolynomialRing};
use crate::error::{Error, Result};

/// Contents of an ideal file.
#[derive(Clone, Debug)]
pub struct IdealFile {
    pub ring: Arc<PolynomialRing>,
    pub polys: Vec<Polynomial>,
}

/// `x0..x5` or a comma separated list of names.
fn parse_ring_header(text: &str) -> Result<Vec<String>> {
    let text = text.trim();
    if let Some((a, b)) = text.split_once("..") {
        let split = |s: &str| -> Option<(String, usize)> {
            let cut = s.find(|c: char| c.is_ascii_digit())?;
            Some((s[..cut].to_string(), s[cut..].parse().ok()?))
        };
        let (pa, lo) = split(a.trim()).ok_or_else(|| Error::invalid(format!("bad ring range `{text}`")))?;
        let (pb, hi) = split(b.trim()).ok_or_else(|| Error::invalid(format!("bad ring range `{text}`")))?;
        if pa != pb || lo > hi {
            return Err(Error::invalid(format!("bad ring range `{text}`")));
        }
        return Ok((lo..=hi).map(|k| format!("{pa}{k}")).collect());
    }
    Ok(text
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(str::to_string)
        .collect())
}

impl IdealFile {
    pub fn parse(text: &str) -> Result<IdealFile> {
        let mut names = None;
        let mut field = None;
        let mut lines = Vec::new();
        for (no, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("ring:") {
                names = Some(parse_ring_header(rest)?);
            } else if let Some(rest) = line.strip_prefix("field:") {
                field = Some(rest.trim().parse::<Field>()?);
            } else {
                lines.push((no + 1, line));
            }
        }
        let names = names.ok_or_else(|| Error::invalid("missing `ring:` header"))?;
        let ring = PolynomialRing::new(names, field.unwrap_or(Field::Rational))?;
        let polys = lines
            .into_iter()
            .map(|(no, l)| {
                parse_poly(l, &ring).map_err(|e| Error::invalid(format!("line {no}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(IdealFile { ring, polys })
    }

    pub fn read(path: &std::path::Path) -> Result<IdealFile> {
        IdealFile::parse(&std::fs::read_to_string(path)?)
    }

    pub fn format(ring: &PolynomialRing, polys: &[Polynomial], comment: Option<&str>) -> String {
        let mut out = String::new();
        if let Some(c) = comment {
            for l in c.lines() {
                let _ = writeln!(out, "# {l}");
            }
        }
        let _ = writeln!(out, "ring: {}", ring.header());
        let _ = writeln!(out, "field: {}", ring.field());
        for p in polys {
            let _ = writeln!(out, "{p}");
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# conic\nring: x0..x2\nfield: QQ\nx0*x2 - x1^2  # the only one\n\n";
        let f = IdealFile::parse(text).unwrap();
        assert_eq!(f.ring.nvars(), 3);
        assert_eq!(f.polys.len(), 1);
        let back = IdealFile::format(&f.ring, &f.polys, None);
        assert_eq!(back, "ring: x0..x2\nfield: QQ\n-x1^2 + x0*x2\n");
        let g = IdealFile::parse(&back).unwrap();
        assert_eq!(g.polys, f.polys);
    }

    #[test]
    fn named_ring_and_prime_field() {
        let f = IdealFile::parse("ring: a,b,c\nfield: GF(7)\n3/2*a*b - c^2\n").unwrap();
        assert_eq!(f.ring.field(), Field::Prime(7));
        assert_eq!(f.polys[0].to_string(), "-2*a*b - c^2");
    }

    #[test]
    fn errors() {
        assert!(IdealFile::parse("x0^2\n").is_err());
        assert!(IdealFile::parse("ring: x0..x2\nfield: GF(4)\n").is_err());
        assert!(IdealFile::parse("ring: x0..x2\nx0 + y\n").is_err());
    }
}
