//! Plain-text points files and JSON certificate files.
//!
//! Points: one point per line, comma-separated decimal coordinates, `#`
//! starts a comment, blank lines ignored, dimension inferred from the first
//! data line.
//!
//! Certificates: a self-contained JSON object with parallel
//! `indices`/`weights` arrays per part — checkable without this library:
//!
//! ```json
//! {"dimension": 2, "n": 4, "algorithm": "simple", "depth": 2, "pruned": true,
//!  "center": [0.5, 0.5],
//!  "parts": [{"indices": [0, 3], "weights": [0.5, 0.5]},
//!            {"indices": [1, 2], "weights": [0.5, 0.5]}]}
//! ```

use serde::{Deserialize, Serialize};

use crate::certificate::{Part, TverbergCertificate};
use crate::error::{Error, Result};
use crate::geometry::{Point, PointSet};
use crate::witness::Witness;

/// Parses the plain-text points format.
pub fn parse_points(text: &str) -> Result<PointSet<f64>> {
    let mut points: Vec<Point<f64>> = Vec::new();
    let mut dim: Option<usize> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        }
        .trim();
        if line.is_empty() {
            continue;
        }
        let coords: Vec<f64> = line
            .split(',')
            .map(|tok| {
                tok.trim().parse::<f64>().map_err(|_| {
                    Error::Parse(format!("line {}: bad coordinate '{}'", lineno + 1, tok.trim()))
                })
            })
            .collect::<Result<_>>()?;
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::Parse(format!("line {}: non-finite coordinate", lineno + 1)));
        }
        match dim {
            None => dim = Some(coords.len()),
            Some(d) if d != coords.len() => {
                return Err(Error::Parse(format!(
                    "line {}: expected {d} coordinates, got {}",
                    lineno + 1,
                    coords.len()
                )));
            }
            _ => {}
        }
        points.push(Point::new(coords));
    }
    if points.is_empty() {
        return Err(Error::Parse("no points in input".into()));
    }
    PointSet::from_points(points).map_err(|e| Error::Parse(e.to_string()))
}

/// Formats a point set in the plain-text format (shortest round-trip float
/// representation, so writing is deterministic).
pub fn format_points(ps: &PointSet<f64>) -> String {
    let mut out = String::new();
    for (_, p) in ps.iter() {
        let line: Vec<String> = p.iter().map(|c| format!("{c}")).collect();
        out.push_str(&line.join(","));
        out.push('\n');
    }
    out
}

#[derive(Serialize, Deserialize)]
struct PartRecord {
    indices: Vec<usize>,
    weights: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct CertificateFile {
    dimension: usize,
    n: usize,
    algorithm: String,
    depth: usize,
    pruned: bool,
    center: Vec<f64>,
    parts: Vec<PartRecord>,
}

/// Context recorded next to a certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateMeta {
    pub algorithm: String,
    pub n: usize,
    pub dimension: usize,
}

/// Serializes a certificate (pretty JSON, stable field order).
pub fn certificate_to_json(cert: &TverbergCertificate<f64>, meta: &CertificateMeta) -> String {
    let parts = cert
        .parts()
        .iter()
        .map(|part| PartRecord {
            indices: part.ids.clone(),
            weights: part.ids.iter().map(|&id| part.witness.get(id)).collect(),
        })
        .collect();
    let file = CertificateFile {
        dimension: meta.dimension,
        n: meta.n,
        algorithm: meta.algorithm.clone(),
        depth: cert.depth(),
        pruned: cert.pruned(),
        center: cert.center().coords().to_vec(),
        parts,
    };
    serde_json::to_string_pretty(&file).expect("serializable") + "\n"
}

/// Deserializes a certificate; malformed weights or indices are preserved so
/// validation can reject them.
pub fn certificate_from_json(text: &str) -> Result<(TverbergCertificate<f64>, CertificateMeta)> {
    let file: CertificateFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("certificate JSON: {e}")))?;
    let mut parts = Vec::with_capacity(file.parts.len());
    for (k, rec) in file.parts.iter().enumerate() {
        if rec.indices.len() != rec.weights.len() {
            return Err(Error::Parse(format!(
                "part {k}: {} indices but {} weights",
                rec.indices.len(),
                rec.weights.len()
            )));
        }
        let witness =
            Witness::from_raw(rec.indices.iter().copied().zip(rec.weights.iter().copied()));
        let mut ids = rec.indices.clone();
        ids.sort_unstable();
        parts.push(Part { ids, witness });
    }
    let cert = TverbergCertificate::from_raw(
        Point::new(file.center),
        parts,
        file.depth,
        file.pruned,
    );
    let meta = CertificateMeta {
        algorithm: file.algorithm,
        n: file.n,
        dimension: file.dimension,
    };
    Ok((cert, meta))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algos::simple_tverberg;
    use crate::verify::verify_certificate;

    #[test]
    fn parse_with_comments_and_blanks() {
        let text = "# demo\n\n1.5, 2.0\n3.0,4.25 # trailing comment\n";
        let ps = parse_points(text).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps.dim(), 2);
        assert_eq!(ps.point(1), &[3.0, 4.25]);
    }

    #[test]
    fn parse_rejects_ragged_rows_and_junk() {
        assert!(matches!(parse_points("1,2\n3\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_points("1,x\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_points("# only comments\n"), Err(Error::Parse(_))));
        assert!(matches!(parse_points("1,inf\n"), Err(Error::Parse(_))));
    }

    #[test]
    fn points_round_trip() {
        let text = "0.1,0.25\n-3,7e-3\n";
        let ps = parse_points(text).unwrap();
        let again = parse_points(&format_points(&ps)).unwrap();
        for (a, b) in ps.iter().zip(again.iter()) {
            assert_eq!(a.1, b.1);
        }
    }

    #[test]
    fn certificate_round_trip() {
        let ps = parse_points("0,0\n1,0\n0,1\n1,1\n").unwrap();
        let cert = simple_tverberg(&ps).unwrap();
        let meta = CertificateMeta { algorithm: "simple".into(), n: 4, dimension: 2 };
        let json = certificate_to_json(&cert, &meta);
        let (loaded, meta2) = certificate_from_json(&json).unwrap();
        assert_eq!(meta, meta2);
        assert_eq!(loaded.depth(), cert.depth());
        assert!(verify_certificate(&ps, &loaded, 1e-8).valid);
    }

    #[test]
    fn certificate_schema_fields() {
        let ps = parse_points("0\n1\n2\n").unwrap();
        let cert = simple_tverberg(&ps).unwrap();
        let meta = CertificateMeta { algorithm: "simple".into(), n: 3, dimension: 1 };
        let json = certificate_to_json(&cert, &meta);
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        for key in ["dimension", "n", "algorithm", "depth", "pruned", "center", "parts"] {
            assert!(value.get(key).is_some(), "missing key {key}");
        }
        let part = &value["parts"][0];
        assert!(part.get("indices").is_some());
        assert!(part.get("weights").is_some());
    }

    #[test]
    fn malformed_certificate_is_parse_error() {
        assert!(matches!(certificate_from_json("{"), Err(Error::Parse(_))));
        let bad = r#"{"dimension":1,"n":1,"algorithm":"x","depth":1,"pruned":true,
                      "center":[0.0],"parts":[{"indices":[0],"weights":[1.0,2.0]}]}"#;
        assert!(matches!(certificate_from_json(bad), Err(Error::Parse(_))));
    }
}
