//! Instance file format.
//!
//! A header line `# d=<int> mode=<mode>` followed by one row of
//! whitespace-separated exact numbers per element. Numbers are integers,
//! fractions `p/q`, or finite decimals, all parsed exactly. Row arities:
//! euclidean d, weighted d+1 (weight last), spherical d+1 (homogeneous),
//! arrangement and halfspaces d+1 (`g_1 .. g_d c`, negative side is where
//! `<g, x> + c <= 0`).

use hefty_core::apps::{AffineFunction, Arrangement};
use hefty_core::numeric::{format_scalar, parse_scalar, Point, Scalar};
use hefty_core::spherical::SphericalPoint;
use hefty_core::weighted::{WeightedPoint, WeightedSet};
use hefty_core::PointSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Euclidean,
    Weighted,
    Spherical,
    Arrangement,
    Halfspaces,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Euclidean => "euclidean",
            Mode::Weighted => "weighted",
            Mode::Spherical => "spherical",
            Mode::Arrangement => "arrangement",
            Mode::Halfspaces => "halfspaces",
        }
    }

    fn parse(s: &str) -> Result<Mode, String> {
        match s {
            "euclidean" => Ok(Mode::Euclidean),
            "weighted" => Ok(Mode::Weighted),
            "spherical" => Ok(Mode::Spherical),
            "arrangement" => Ok(Mode::Arrangement),
            "halfspaces" => Ok(Mode::Halfspaces),
            other => Err(format!("unknown mode `{other}`")),
        }
    }
}

#[derive(Debug, Clone)]
pub enum Instance {
    Euclidean(PointSet),
    Weighted(WeightedSet),
    Spherical(Vec<SphericalPoint>),
    Arrangement(Arrangement),
}

#[derive(Debug, Clone)]
pub struct InputFile {
    pub dim: usize,
    pub mode: Mode,
    pub instance: Instance,
}

pub fn parse_input(text: &str) -> Result<InputFile, String> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let header = lines.next().ok_or("empty input")?;
    let header = header
        .strip_prefix('#')
        .ok_or("first line must be a `# d=<int> mode=<mode>` header")?
        .trim();
    let mut dim: Option<usize> = None;
    let mut mode: Option<Mode> = None;
    for field in header.split_whitespace() {
        if let Some(v) = field.strip_prefix("d=") {
            dim = Some(v.parse().map_err(|e| format!("bad dimension: {e}"))?);
        } else if let Some(v) = field.strip_prefix("mode=") {
            mode = Some(Mode::parse(v)?);
        } else {
            return Err(format!("unknown header field `{field}`"));
        }
    }
    let dim = dim.ok_or("header is missing d=<int>")?;
    let mode = mode.ok_or("header is missing mode=<mode>")?;
    if dim == 0 {
        return Err("dimension must be at least 1".into());
    }

    let mut rows: Vec<Vec<Scalar>> = Vec::new();
    for (lineno, line) in lines.enumerate() {
        if line.starts_with('#') {
            continue;
        }
        let row: Result<Vec<Scalar>, String> = line
            .split_whitespace()
            .map(|tok| parse_scalar(tok).map_err(|e| format!("row {}: {e}", lineno + 2)))
            .collect();
        rows.push(row?);
    }
    let arity = match mode {
        Mode::Euclidean => dim,
        Mode::Weighted | Mode::Spherical | Mode::Arrangement | Mode::Halfspaces => dim + 1,
    };
    for (i, row) in rows.iter().enumerate() {
        if row.len() != arity {
            return Err(format!(
                "row {} has {} values, mode {} in dimension {dim} needs {arity}",
                i + 1,
                row.len(),
                mode.name()
            ));
        }
    }

    let instance = match mode {
        Mode::Euclidean => {
            let pts = rows.into_iter().map(Point::new).collect();
            Instance::Euclidean(PointSet::new(dim, pts, "input").map_err(|e| e.to_string())?)
        }
        Mode::Weighted => {
            let pts = rows
                .into_iter()
                .map(|mut row| {
                    let w = row.pop().expect("arity checked");
                    WeightedPoint::new(Point::new(row), w)
                })
                .collect();
            Instance::Weighted(WeightedSet::new(dim, pts, "input").map_err(|e| e.to_string())?)
        }
        Mode::Spherical => {
            let pts: Result<Vec<SphericalPoint>, _> = rows
                .into_iter()
                .map(SphericalPoint::from_homogeneous)
                .collect();
            Instance::Spherical(pts.map_err(|e| e.to_string())?)
        }
        Mode::Arrangement | Mode::Halfspaces => {
            let fns: Result<Vec<AffineFunction>, _> = rows
                .into_iter()
                .map(|mut row| {
                    let c = row.pop().expect("arity checked");
                    AffineFunction::new(row, c)
                })
                .collect();
            Instance::Arrangement(
                Arrangement::new(dim, fns.map_err(|e| e.to_string())?).map_err(|e| e.to_string())?,
            )
        }
    };
    Ok(InputFile { dim, mode, instance })
}

fn write_rows(out: &mut String, rows: impl Iterator<Item = Vec<String>>) {
    for row in rows {
        out.push_str(&row.join(" "));
        out.push('\n');
    }
}

/// Canonical text form; parsing it back yields an identical instance.
pub fn write_input(file: &InputFile) -> String {
    let mut out = format!("# d={} mode={}\n", file.dim, file.mode.name());
    match &file.instance {
        Instance::Euclidean(set) => write_rows(
            &mut out,
            set.points()
                .iter()
                .map(|p| p.coords().iter().map(format_scalar).collect()),
        ),
        Instance::Weighted(set) => write_rows(
            &mut out,
            set.points().iter().map(|wp| {
                let mut row: Vec<String> = wp.location.coords().iter().map(format_scalar).collect();
                row.push(format_scalar(&wp.weight));
                row
            }),
        ),
        Instance::Spherical(points) => write_rows(
            &mut out,
            points
                .iter()
                .map(|p| p.unit().iter().map(format_scalar).collect()),
        ),
        Instance::Arrangement(arr) => write_rows(
            &mut out,
            arr.functions().iter().map(|f| {
                let mut row: Vec<String> = f.gradient.iter().map(format_scalar).collect();
                row.push(format_scalar(&f.offset));
                row
            }),
        ),
    }
    out
}

/// Exact comma-separated coordinates, e.g. `1/2,-3,0.25`.
pub fn parse_query(text: &str, dim: usize) -> Result<Point, String> {
    let coords: Result<Vec<Scalar>, String> = text.split(',').map(parse_scalar).collect();
    let coords = coords?;
    if coords.len() != dim {
        return Err(format!(
            "query has {} coordinates, expected {dim}",
            coords.len()
        ));
    }
    Ok(Point::new(coords))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_euclidean() {
        let text = "# d=2 mode=euclidean\n0 0\n1/2 -3\n0.25 7\n";
        let parsed = parse_input(text).unwrap();
        assert_eq!(write_input(&parsed), "# d=2 mode=euclidean\n0 0\n1/2 -3\n1/4 7\n");
        let again = parse_input(&write_input(&parsed)).unwrap();
        assert_eq!(write_input(&again), write_input(&parsed));
    }

    #[test]
    fn arity_is_checked() {
        assert!(parse_input("# d=2 mode=euclidean\n1 2 3\n").is_err());
        assert!(parse_input("# d=2 mode=weighted\n1 2\n").is_err());
    }

    #[test]
    fn weighted_and_arrangement_rows() {
        let w = parse_input("# d=2 mode=weighted\n0 0 1\n2 0 -1/2\n").unwrap();
        assert!(matches!(w.instance, Instance::Weighted(_)));
        let a = parse_input("# d=2 mode=arrangement\n1 0 0\n0 1 -2\n").unwrap();
        assert!(matches!(a.instance, Instance::Arrangement(_)));
    }
}
