//! Deterministic SVG rendering of 2D instances.
//!
//! All coordinates are produced from exact rationals with fixed-point
//! formatting and integer square roots, so output bytes never depend on
//! platform floating point.

use hefty_core::apps::{enumerate_chambers, Arrangement};
use hefty_core::numeric::{circumsphere, format_fixed, int, ratio, Point, Scalar};
use hefty_core::spherical::SphericalPoint;
use hefty_core::PointSet;
use num::bigint::BigInt;
use num::Zero;

const PALETTE: &[&str] = &[
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
];

fn fmt(s: &Scalar) -> String {
    format_fixed(s, 4)
}

/// Deterministic rational approximation of sqrt(x) via integer square root.
fn approx_sqrt(x: &Scalar) -> Scalar {
    if x.is_zero() {
        return Scalar::zero();
    }
    let scale = BigInt::from(100_000_000u64); // 10^8 under the root, 10^4 out
    let scaled = (x.numer() * &scale * &scale) / x.denom();
    Scalar::new(scaled.sqrt(), scale)
}

struct Canvas {
    min_x: Scalar,
    min_y: Scalar,
    max_x: Scalar,
    max_y: Scalar,
    body: String,
}

impl Canvas {
    fn new(xs: impl Iterator<Item = (Scalar, Scalar)>) -> Canvas {
        let mut min_x: Option<Scalar> = None;
        let mut min_y: Option<Scalar> = None;
        let mut max_x: Option<Scalar> = None;
        let mut max_y: Option<Scalar> = None;
        for (x, y) in xs {
            min_x = Some(min_x.map_or(x.clone(), |m| if x < m { x.clone() } else { m }));
            max_x = Some(max_x.map_or(x.clone(), |m| if x > m { x } else { m }));
            min_y = Some(min_y.map_or(y.clone(), |m| if y < m { y.clone() } else { m }));
            max_y = Some(max_y.map_or(y.clone(), |m| if y > m { y } else { m }));
        }
        let one = int(1);
        Canvas {
            min_x: min_x.unwrap_or_else(|| -one.clone()),
            min_y: min_y.unwrap_or_else(|| -one.clone()),
            max_x: max_x.unwrap_or_else(|| one.clone()),
            max_y: max_y.unwrap_or(one),
            body: String::new(),
        }
    }

    fn pad(&mut self, fraction: (i64, i64)) {
        let margin_x = (&self.max_x - &self.min_x + int(1)) * ratio(fraction.0, fraction.1);
        let margin_y = (&self.max_y - &self.min_y + int(1)) * ratio(fraction.0, fraction.1);
        self.min_x = &self.min_x - &margin_x;
        self.max_x = &self.max_x + &margin_x;
        self.min_y = &self.min_y - &margin_y;
        self.max_y = &self.max_y + &margin_y;
    }

    fn size(&self) -> Scalar {
        let w = &self.max_x - &self.min_x;
        let h = &self.max_y - &self.min_y;
        if w > h {
            w
        } else {
            h
        }
    }

    /// y grows upward in the geometry; flip for SVG.
    fn y(&self, v: &Scalar) -> Scalar {
        &self.max_y + &self.min_y - v
    }

    fn finish(self) -> String {
        let w = &self.max_x - &self.min_x;
        let h = &self.max_y - &self.min_y;
        format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" viewBox=\"{} {} {} {}\">\n{}</svg>\n",
            fmt(&self.min_x),
            fmt(&self.min_y),
            fmt(&w),
            fmt(&h),
            self.body
        )
    }
}

fn polygon(canvas: &mut Canvas, pts: &[&Point], fill: &str, opacity: &str, stroke_w: &Scalar) {
    let coords: Vec<String> = pts
        .iter()
        .map(|p| format!("{},{}", fmt(p.coord(0)), fmt(&canvas.y(p.coord(1)))))
        .collect();
    canvas.body.push_str(&format!(
        "  <polygon points=\"{}\" fill=\"{fill}\" fill-opacity=\"{opacity}\" stroke=\"#333333\" stroke-width=\"{}\"/>\n",
        coords.join(" "),
        fmt(stroke_w)
    ));
}

fn dot(canvas: &mut Canvas, p: &Point, r: &Scalar, fill: &str) {
    canvas.body.push_str(&format!(
        "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"{fill}\"/>\n",
        fmt(p.coord(0)),
        fmt(&canvas.y(p.coord(1))),
        fmt(r)
    ));
}

/// Points of a planar set, optionally with its k-hefty triangles shaded by
/// heft and their circumcircles stroked.
pub fn render_euclidean(set: &PointSet, k: Option<usize>) -> Result<String, String> {
    if set.dim() != 2 {
        return Err(format!("render supports dimension 2, got {}", set.dim()));
    }
    let mut canvas = Canvas::new(
        set.points()
            .iter()
            .map(|p| (p.coord(0).clone(), p.coord(1).clone())),
    );
    canvas.pad((1, 8));
    let size = canvas.size();
    let thin = &size * ratio(1, 400);
    if let Some(k) = k {
        let simplices = set.enumerate_hefty(k).map_err(|e| e.to_string())?;
        for s in &simplices {
            let pts: Vec<&Point> = s.vertices.iter().map(|&i| set.point(i)).collect();
            let fill = PALETTE[s.heft() % PALETTE.len()];
            polygon(&mut canvas, &pts, fill, "0.25", &thin);
        }
        for s in &simplices {
            let pts = set.simplex_points(&s.vertices);
            let sphere = circumsphere(&pts).map_err(|e| e.to_string())?;
            let r = approx_sqrt(&sphere.squared_radius);
            canvas.body.push_str(&format!(
                "  <circle cx=\"{}\" cy=\"{}\" r=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"{}\" stroke-opacity=\"0.6\"/>\n",
                fmt(sphere.center.coord(0)),
                fmt(&canvas.y(sphere.center.coord(1))),
                fmt(&r),
                PALETTE[s.heft() % PALETTE.len()],
                fmt(&thin)
            ));
        }
    }
    let dot_r = &size * ratio(1, 120);
    for p in set.points() {
        dot(&mut canvas, p, &dot_r, "#222222");
    }
    Ok(canvas.finish())
}

/// Lines of a 2D arrangement clipped to the drawing box, hatched on their
/// positive sides, with chambers labeled by heft at their witness points.
pub fn render_arrangement(arr: &Arrangement) -> Result<String, String> {
    if arr.dim() != 2 {
        return Err(format!("render supports dimension 2, got {}", arr.dim()));
    }
    let chambers = enumerate_chambers(arr, None).map_err(|e| e.to_string())?;
    let mut canvas = Canvas::new(
        chambers
            .iter()
            .map(|c| (c.witness.coord(0).clone(), c.witness.coord(1).clone())),
    );
    canvas.pad((1, 4));
    let size = canvas.size();
    let thin = &size * ratio(1, 400);
    let tick = &size * ratio(1, 60);

    for (i, f) in arr.functions().iter().enumerate() {
        // clip the zero set to the box
        let mut ends: Vec<(Scalar, Scalar)> = Vec::new();
        let (gx, gy) = (&f.gradient[0], &f.gradient[1]);
        for edge in 0..4 {
            let (fixed_val, horizontal) = match edge {
                0 => (canvas.min_x.clone(), false),
                1 => (canvas.max_x.clone(), false),
                2 => (canvas.min_y.clone(), true),
                _ => (canvas.max_y.clone(), true),
            };
            let (a, b) = if horizontal { (gy, gx) } else { (gx, gy) };
            if b.is_zero() {
                continue;
            }
            let other = -(&f.offset + a * &fixed_val) / b;
            let (x, y) = if horizontal {
                (other, fixed_val)
            } else {
                (fixed_val, other)
            };
            let inside = x >= canvas.min_x
                && x <= canvas.max_x
                && y >= canvas.min_y
                && y <= canvas.max_y;
            if inside && !ends.contains(&(x.clone(), y.clone())) {
                ends.push((x, y));
            }
        }
        if ends.len() < 2 {
            continue;
        }
        let (p1, p2) = (&ends[0], &ends[1]);
        let color = PALETTE[i % PALETTE.len()];
        canvas.body.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{color}\" stroke-width=\"{}\"/>\n",
            fmt(&p1.0),
            fmt(&canvas.y(&p1.1)),
            fmt(&p2.0),
            fmt(&canvas.y(&p2.1)),
            fmt(&thin)
        ));
        // hatch ticks pointing into the positive side
        let norm = approx_sqrt(&(gx * gx + gy * gy));
        if !norm.is_zero() {
            let (ux, uy) = (&(gx * &tick) / &norm, &(gy * &tick) / &norm);
            for frac in [ratio(1, 4), ratio(1, 2), ratio(3, 4)] {
                let bx = &p1.0 + (&p2.0 - &p1.0) * &frac;
                let by = &p1.1 + (&p2.1 - &p1.1) * &frac;
                canvas.body.push_str(&format!(
                    "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{color}\" stroke-width=\"{}\"/>\n",
                    fmt(&bx),
                    fmt(&canvas.y(&by)),
                    fmt(&(&bx + &ux)),
                    fmt(&canvas.y(&(&by + &uy))),
                    fmt(&thin)
                ));
            }
        }
    }
    let font = &size * ratio(1, 30);
    for c in &chambers {
        canvas.body.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" font-size=\"{}\" text-anchor=\"middle\" fill=\"#111111\">{}</text>\n",
            fmt(c.witness.coord(0)),
            fmt(&canvas.y(c.witness.coord(1))),
            fmt(&font),
            c.heft
        ));
    }
    Ok(canvas.finish())
}

/// Points on S^1 with the heft-k chords drawn inside the unit circle.
pub fn render_circle(points: &[SphericalPoint], k: Option<usize>) -> Result<String, String> {
    if points.iter().any(|p| p.sphere_dim() != 1) {
        return Err("circle rendering needs points of S^1".to_string());
    }
    let mut canvas = Canvas::new(std::iter::once((int(-1), int(1))));
    canvas.min_x = int(-1);
    canvas.max_x = int(1);
    canvas.min_y = int(-1);
    canvas.max_y = int(1);
    canvas.pad((1, 8));
    let size = canvas.size();
    let thin = &size * ratio(1, 400);
    canvas.body.push_str(&format!(
        "  <circle cx=\"0.0000\" cy=\"{}\" r=\"1.0000\" fill=\"none\" stroke=\"#888888\" stroke-width=\"{}\"/>\n",
        fmt(&canvas.y(&Scalar::zero())),
        fmt(&thin)
    ));
    if let Some(k) = k {
        let simplices =
            hefty_core::spherical::enumerate_hefty_sphere(points, k).map_err(|e| e.to_string())?;
        for s in &simplices {
            let a = &points[s.vertices[0]];
            let b = &points[s.vertices[1]];
            canvas.body.push_str(&format!(
                "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" stroke-width=\"{}\"/>\n",
                fmt(&a.unit()[0]),
                fmt(&canvas.y(&a.unit()[1])),
                fmt(&b.unit()[0]),
                fmt(&canvas.y(&b.unit()[1])),
                PALETTE[k % PALETTE.len()],
                fmt(&(&thin + &thin))
            ));
        }
    }
    let dot_r = &size * ratio(1, 120);
    for p in points {
        let pt = Point::new(p.unit().to_vec());
        dot(&mut canvas, &pt, &dot_r, "#222222");
    }
    Ok(canvas.finish())
}
