//! `hefty`: enumerate k-hefty simplices of exact-coordinate instances, verify
//! the covering bounds, and render 2D figures.
//!
//! Exit codes: 0 success, 1 a theorem check failed, 2 input or degeneracy
//! error (a structured message goes to stderr).

mod input;
mod report;
mod svg;

use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde_json::json;

use hefty_core::apps::{
    binomial_usize, enumerate_chambers, eulerian, facet_counts, gen_hexmesh, gen_polygon_duals,
    gen_random_arrangement, gen_random_circle_normals, hemisphere_chambers,
    hypersimplex_identity_check, hypersimplex_relative_volume, k_facets, level_maxima,
    level_minima, line_entry_count, order_n_mosaic_cells, worpitzky_check, Line,
};
use hefty_core::euclidean::{gen_pentagon, gen_radial, gen_random_points};
use hefty_core::numeric::{format_scalar, int, parse_scalar, ratio, Containment, Point, Scalar};
use hefty_core::spherical::{
    covering_count_sphere, enumerate_hefty_sphere, gen_balanced_sphere, is_k_balanced,
};
use hefty_core::{HeftySimplex, PointSet};

use input::{parse_input, parse_query, write_input, InputFile, Instance, Mode};
use report::{point_json, simplex_json, Report};

#[derive(Parser)]
#[command(name = "hefty", version, about = "Exact k-hefty simplex toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct IoArgs {
    /// Instance file; standard input when omitted
    #[arg(long)]
    input: Option<PathBuf>,
    /// Report destination; standard output when omitted
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// List all simplices with heft exactly k
    Enumerate {
        #[arg(long)]
        k: usize,
        /// Enumerate subsets in parallel (deterministic merge order)
        #[arg(long)]
        parallel: bool,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Covering multiplicity of a query point
    Cover {
        #[arg(long)]
        k: usize,
        /// Exact coordinates `x,y,...`, or `auto-center` for the deepest vertex
        #[arg(long)]
        query: String,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Local covering count at a vertex
    Localcover {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        vertex: usize,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Tukey depth and k-hull membership of a query point
    Khull {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        query: String,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Oriented k-facet counts
    Kfacets {
        /// Report the k-facets themselves
        #[arg(long)]
        k: Option<usize>,
        /// Report counts F_0..F_max_k
        #[arg(long)]
        max_k: Option<usize>,
        #[command(flatten)]
        io: IoArgs,
    },
    /// k-facets a directed line enters
    Entries {
        #[arg(long)]
        k: usize,
        /// `ox,oy,..:ux,uy,..` exact origin and direction
        #[arg(long)]
        line: String,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Local minima and maxima of the k-level of an arrangement
    Levels {
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Chamber census of a half-space arrangement
    Chambers {
        /// Bounding-box half-width (exact number); automatic when omitted
        #[arg(long = "box")]
        half_width: Option<String>,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Chamber heft census of hemispheres (input: spherical normals)
    Hemichambers {
        #[command(flatten)]
        io: IoArgs,
    },
    /// Hypersimplex relative volumes and the de Laplace relation
    Hypersimplex {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        p: Option<usize>,
    },
    /// Worpitzky and hypersimplex volume identities at (d, n)
    Worpitzky {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
    },
    /// Order-n mosaic cells
    Mosaic {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        query: Option<String>,
        #[command(flatten)]
        io: IoArgs,
    },
    /// Emit a generated instance in the input format
    Gen {
        #[command(subcommand)]
        target: GenTarget,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Render a 2D instance (or S^1) as SVG
    Render {
        /// Shade the heft-k simplices
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        io: IoArgs,
    },
}

#[derive(Subcommand)]
enum GenTarget {
    /// Six points: one surrounded by five, with five 1-hefty triangles
    Pentagon,
    /// Radial set: layers points on each of d+1 rays from the origin
    Radial {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        layers: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Lower-bound arrangement with C(d+k, d) minimum-heft-k chambers
    Hexmesh {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        k: usize,
    },
    /// Seeded random generic point set
    Random {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Seeded generic k-balanced set on S^1 or S^2
    Sphere {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Half-circle normals dual to a near-regular (2k+1)-gon
    PolygonDuals {
        #[arg(long)]
        k: usize,
    },
    /// Seeded random generic arrangement
    RandomArrangement {
        #[arg(long)]
        d: usize,
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Seeded random half-circle normals on S^1
    RandomHemispheres {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() {
    env_logger::init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => std::process::exit(code),
        Err(message) => {
            let doc = json!({ "error": message });
            eprintln!("{}", serde_json::to_string_pretty(&doc).expect("error serializes"));
            std::process::exit(2);
        }
    }
}

fn read_instance(io: &IoArgs) -> Result<(InputFile, String), String> {
    let raw = match &io.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("reading input: {e}"))?,
        None => {
            let mut buf = String::new();
            std::io::stdin()
                .read_to_string(&mut buf)
                .map_err(|e| format!("reading stdin: {e}"))?;
            buf
        }
    };
    let parsed = parse_input(&raw)?;
    Ok((parsed, raw))
}

fn emit(io: &IoArgs, text: &str) -> Result<(), String> {
    match &io.output {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("writing output: {e}")),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(command: Command) -> Result<i32, String> {
    match command {
        Command::Enumerate { k, parallel, io } => cmd_enumerate(k, parallel, io),
        Command::Cover { k, query, io } => cmd_cover(k, &query, io),
        Command::Localcover { k, vertex, io } => cmd_localcover(k, vertex, io),
        Command::Khull { k, query, io } => cmd_khull(k, &query, io),
        Command::Kfacets { k, max_k, io } => cmd_kfacets(k, max_k, io),
        Command::Entries { k, line, io } => cmd_entries(k, &line, io),
        Command::Levels { k, io } => cmd_levels(k, io),
        Command::Chambers { half_width, io } => cmd_chambers(half_width, io),
        Command::Hemichambers { io } => cmd_hemichambers(io),
        Command::Hypersimplex { d, p } => cmd_hypersimplex(d, p),
        Command::Worpitzky { d, n } => cmd_worpitzky(d, n),
        Command::Mosaic { n, query, io } => cmd_mosaic(n, query.as_deref(), io),
        Command::Gen { target, output } => cmd_gen(target, output),
        Command::Render { k, io } => cmd_render(k, io),
    }
}

fn finish(mut report: Report, io: &IoArgs) -> Result<i32, String> {
    let code = report.finish();
    emit(io, &report.to_json())?;
    Ok(code)
}

fn cmd_enumerate(k: usize, parallel: bool, io: IoArgs) -> Result<i32, String> {
    let (file, raw) = read_instance(&io)?;
    let mut report = Report::new("enumerate");
    report.digest_input(&raw);
    report.param("k", k);
    report.param("mode", file.mode.name());
    let simplices: Vec<HeftySimplex> = match &file.instance {
        Instance::Euclidean(set) => {
            if parallel {
                set.enumerate_all_parallel()
                    .map_err(|e| e.to_string())?
                    .into_iter()
                    .filter(|s| s.heft() == k)
                    .collect()
            } else {
                set.enumerate_hefty(k).map_err(|e| e.to_string())?
            }
        }
        Instance::Weighted(set) => set.enumerate_hefty(k).map_err(|e| e.to_string())?,
        Instance::Spherical(points) => {
            enumerate_hefty_sphere(points, k).map_err(|e| e.to_string())?
        }
        Instance::Arrangement(_) => {
            return Err("enumerate expects a point-set mode, not an arrangement".into())
        }
    };
    report.results = json!({
        "count": simplices.len(),
        "simplices": simplices.iter().map(simplex_json).collect::<Vec<_>>(),
    });
    finish(report, &io)
}

fn deepest_vertex(set: &PointSet) -> Result<usize, String> {
    let mut best = (0usize, 0usize);
    for v in 0..set.len() {
        let rest: Vec<Point> = set
            .points()
            .iter()
            .enumerate()
            .filter(|(i, _)| *i != v)
            .map(|(_, p)| p.clone())
            .collect();
        let reduced =
            PointSet::new(set.dim(), rest, "reduced").map_err(|e| e.to_string())?;
        let depth = reduced.tukey_depth(set.point(v)).map_err(|e| e.to_string())?;
        if depth > best.1 {
            best = (v, depth);
        }
    }
    Ok(best.0)
}

/// A generic query point close to the vertex: walk toward the centroid with
/// shrinking steps until the covering report is boundary-free.
fn near_vertex_query(
    set: &PointSet,
    vertex: usize,
    k: usize,
    simplices: &[HeftySimplex],
) -> Result<(Point, hefty_core::CoverReport), String> {
    let centroid = Point::new(
        (0..set.dim())
            .map(|c| {
                let total: Scalar = set.points().iter().map(|p| p.coord(c).clone()).sum();
                total / int(set.len() as i64)
            })
            .collect(),
    );
    let v = set.point(vertex);
    let mut lambda = ratio(1, 64);
    for _ in 0..24 {
        let q = Point::new(
            v.coords()
                .iter()
                .zip(centroid.coords())
                .map(|(a, b)| a + &lambda * (b - a))
                .collect(),
        );
        lambda *= ratio(1, 4);
        match set.covering_among(k, &q, simplices) {
            Ok(r) if !r.boundary_flag => return Ok((q, r)),
            Ok(_) => continue,
            Err(hefty_core::Error::QueryAtSetPoint(_)) => continue,
            Err(e) => return Err(e.to_string()),
        }
    }
    Err("no generic query point found near the vertex".into())
}

fn cmd_cover(k: usize, query: &str, io: IoArgs) -> Result<i32, String> {
    let (file, raw) = read_instance(&io)?;
    let mut report = Report::new("cover");
    report.digest_input(&raw);
    report.param("k", k);
    report.param("query", query);
    report.param("mode", file.mode.name());
    match &file.instance {
        Instance::Euclidean(set) => {
            let d = set.dim();
            let expected = binomial_usize(d + k, d);
            if query == "auto-center" {
                let vertex = deepest_vertex(set)?;
                let local = set.local_covering_count(k, vertex).map_err(|e| e.to_string())?;
                let local_expected = binomial_usize(d + k - 1, d - 1);
                let simplices = set.enumerate_hefty(k).map_err(|e| e.to_string())?;
                let (q, r) = near_vertex_query(set, vertex, k, &simplices)?;
                let member = set.khull_member(k, &q).map_err(|e| e.to_string())?;
                report.results = json!({
                    "auto_center_vertex": vertex,
                    "local_count": local,
                    "global_query": point_json(&q),
                    "global_count": r.count,
                    "in_k_hull": member,
                    "witnesses": r.witnesses.iter().map(simplex_json).collect::<Vec<_>>(),
                });
                report.check(
                    "local_covering_at_most_binomial",
                    format!("<= {local_expected}"),
                    local,
                    local <= local_expected,
                );
                report.info_check(
                    "local_covering_equals_binomial",
                    local_expected,
                    local,
                    local == local_expected,
                );
                check_global(&mut report, expected, r.count, member);
            } else {
                let q = parse_query(query, d)?;
                let r = set.covering_count(k, &q).map_err(|e| e.to_string())?;
                let member = set.khull_member(k, &q).map_err(|e| e.to_string())?;
                report.results = json!({
                    "count": r.count,
                    "boundary": r.boundary_flag,
                    "in_k_hull": member,
                    "witnesses": r.witnesses.iter().map(simplex_json).collect::<Vec<_>>(),
                });
                if r.boundary_flag {
                    report.info_check(
                        "query_generic",
                        "no boundary incidence",
                        "query on a simplex boundary",
                        false,
                    );
                } else {
                    check_global(&mut report, expected, r.count, member);
                }
            }
        }
        Instance::Weighted(set) => {
            let q = parse_query(query, set.dim())?;
            let r = set.covering_count(k, &q).map_err(|e| e.to_string())?;
            let expected = binomial_usize(set.dim() + k, set.dim());
            report.results = json!({
                "count": r.count,
                "boundary": r.boundary_flag,
                "witnesses": r.witnesses.iter().map(simplex_json).collect::<Vec<_>>(),
            });
            report.info_check("covering_multiplicity", expected, r.count, r.count == expected);
        }
        Instance::Spherical(points) => {
            let d = file.dim;
            let coords: Result<Vec<Scalar>, String> =
                query.split(',').map(parse_scalar).collect();
            let q = hefty_core::spherical::SphericalPoint::from_homogeneous(coords?)
                .map_err(|e| e.to_string())?;
            let balanced = is_k_balanced(points, k).map_err(|e| e.to_string())?;
            let r = covering_count_sphere(points, k, &q).map_err(|e| e.to_string())?;
            let expected = binomial_usize(d + k, d);
            report.results = json!({
                "count": r.count,
                "boundary": r.boundary_flag,
                "k_balanced": balanced,
                "witnesses": r.witnesses.iter().map(simplex_json).collect::<Vec<_>>(),
            });
            if balanced && !r.boundary_flag {
                report.check("spherical_covering_multiplicity", expected, r.count, r.count == expected);
            } else {
                report.info_check("spherical_covering_multiplicity", expected, r.count, r.count == expected);
            }
        }
        Instance::Arrangement(_) => return Err("cover expects a point-set mode".into()),
    }
    finish(report, &io)
}

fn check_global(report: &mut Report, expected: usize, count: usize, member: bool) {
    if member {
        report.check("covering_equals_binomial_inside_k_hull", expected, count, count == expected);
    } else {
        report.check(
            "covering_below_binomial_outside_k_hull",
            format!("< {expected}"),
            count,
            count < expected,
        );
    }
}

fn cmd_localcover(k: usize, vertex: usize, io: IoArgs) -> Result<i32, String> {
    let (file, raw) = read_instance(&io)?;
    let Instance::Euclidean(set) = &file.instance else {
        return Err("localcover expects mode=euclidean".into());
    };
    let mut report = Report::new("localcover");
    report.digest_input(&raw);
    report.param("k", k);
    report.param("vertex", vertex);
    let count = set.local_covering_count(k, vertex).map_err(|e| e.to_string())?;
    let d = set.dim();
    let expected = binomial_usize(d + k - 1, d - 1);
    report.results = json!({ "local_count": count });
    report.check(
        "local_covering_at_most_binomial",
        format!("<= {expected}"),
        count,
        count <= expected,
    );
    report.info_check("local_covering_equals_binomial", expected, count, count == expected);
    finish(report, &io)
}

fn cmd_khull(k: usize, query: &str, io: IoArgs) -> Result<i32, String> {
    let (file, raw) = read_instance(&io)?;
    let Instance::Euclidean(set) = &file.instance else {
        return Err("khull expects mode=euclidean".into());
    };
    let q = parse_query(query, set.dim())?;
    let depth = set.tukey_depth(&q).map_err(|e| e.to_string())?;
    let member = depth >= k + 1;
    let mut report = Report::new("khull");
    report.digest_input(&raw);
    report.param("k", k);
    report.param("query", query);
    report.results = json!({ "tukey_depth": depth, "member": member });
    finish(report, &io)
}

fn cmd_kfacets(k: Option<usize>, max_k: Option<usize>, io: IoArgs) -> Result<i32, String> {
    let (file, raw) = read_instance(&io)?;
    let Instance::Euclidean(set) = &file.instance else {
        return Err("kfacets expects mode=euclidean".into());
    };
    let mut report = Report::new("kfacets");
    report.digest_input(&raw);
    let n = set.len();
    let d = set.dim();
    match (k, max_k) {
        (Some(k), _) => {
            report.param("k", k);
            let facets = k_facets(set, k).map_err(|e| e.to_string())?;
            report.results = json!({
                "count": facets.len(),
                "facets": facets.iter().map(|f| json!({
                    "indices": f.indices,
                    "side": if f.side == hefty_core::Sign::Positive { "+" } else { "-" },
                })).collect::<Vec<_>>(),
            });
        }
        (None, Some(max_k)) => {
            report.param("max_k", max_k);
            let counts = facet_counts(set, max_k).map_err(|e| e.to_string())?;
            report.results = json!({ "facet_counts": counts });
            if d == 2 && max_k <= (n.saturating_sub(3)) / 3 {
                let mut running = 0usize;
                let mut ok = true;
                for (j, c) in counts.iter().enumerate() {
                    running += c;
                    ok &= running <= (j + 1) * n;
                }
                report.check(
                    "sum_of_facet_counts_at_most_bound",
                    format!("<= (k+1), n = {n}"),
                    format!("{counts:?}"),
                    ok,
                );
            }
        }
        (None, None) => return Err("kfacets needs --k or --max-k".into()),
    }
    finish(report, &io)
}

fn cmd_entries(k: usize, line: &str, io: IoArgs) -> Result<i32, String> {
    let (file, raw) = read_instance(&io)?;
    let Instance::Euclidean(set) = &file.instance else {
        return Err("entries expects mode=euclidean".into());
    };
    let d = set.dim();
    let (origin, direction) = line
        .split_once(':')
        .ok_or("line format is `ox,oy,..:ux,uy,..`")?;
    let origin = parse_query(origin, d)?;
    let direction = parse_query(direction, d)?;
    let forward = Line {
        origin: origin.clone(),
        direction: direction.coords().to_vec(),
    };
    let backward = Line {
        origin,
        direction: direction.coords().iter().map(|c| -c).collect(),
    };
    let fwd = line_entry_count(set, k, &forward).map_err(|e| e.to_string())?;
    let bwd = line_entry_count(set, k, &backward).map_err(|e| e.to_string())?;
    let bound = binomial_usize(d + k - 1, d - 1);
    let mut report = Report::new("entries");
    report.digest_input(&raw);
    report.param("k", k);
    report.param("line", line);
    report.results = json!({ "entered": fwd, "entered_reverse": bwd });
    report.check("entries_at_most_binomial", format!("<= {bound}"), fwd, fwd <= bound);
    report.check(
        "both_directions_at_most_twice_binomial",
        format!("<= {}", 2 * bound),
        fwd + bwd,
        fwd + bwd <= 2 * bound,
    );
    finish(report, &io)
}

fn cmd_levels(k: usize, io: IoArgs) -> Result<i32, String> {
    let (file, raw) = read_instance(&io)?;
    let Instance::Arrangement(arr) = &file.instance else {
        return Err("levels expects mode=arrangement".into());
    };
    let minima = level_minima(arr, k).map_err(|e| e.to_string())?;
    let maxima = level_maxima(arr, k).map_err(|e| e.to_string())?;
    let d = arr.dim();
    let min_bound = binomial_usize(d + k, d);
    let max_bound = if k >= d { binomial_usize(k, d) } else { 0 };
    let mut report = Report::new("levels");
    report.digest_input(&raw);
    report.param("k", k);
    report.results = json!({
        "minima": minima.iter().map(point_json).collect::<Vec<_>>(),
        "maxima": maxima.iter().map(point_json).collect::<Vec<_>>(),
    });
    report.check(
        "minima_at_most_binomial",
        format!("<= {min_bound}"),
        minima.len(),
        minima.len() <= min_bound,
    );
    report.check(
        "maxima_at_most_binomial",
        format!("<= {max_bound}"),
        maxima.len(),
        maxima.len() <= max_bound,
    );
    finish(report, &io)
}

fn cmd_chambers(half_width: Option<String>, io: IoArgs) -> Result<i32, String> {
    let (file, raw) = read_instance(&io)?;
    let Instance::Arrangement(arr) = &file.instance else {
        return Err("chambers expects mode=arrangement or mode=halfspaces".into());
    };
    let width = match &half_width {
        Some(text) => Some(parse_scalar(text)?),
        None => None,
    };
    let chambers = enumerate_chambers(arr, width).map_err(|e| e.to_string())?;
    let min_heft = chambers.iter().map(|c| c.heft).min().unwrap_or(0);
    let min_count = chambers.iter().filter(|c| c.heft == min_heft).count();
    let d = arr.dim();
    let bound = binomial_usize(d + min_heft, d);
    let mut histogram = std::collections::BTreeMap::new();
    for c in &chambers {
        *histogram.entry(c.heft).or_insert(0usize) += 1;
    }
    let mut report = Report::new("chambers");
    report.digest_input(&raw);
    if let Some(w) = half_width {
        report.param("box", w);
    }
    report.results = json!({
        "chambers": chambers.len(),
        "min_heft": min_heft,
        "min_heft_chambers": min_count,
        "heft_histogram": histogram,
        "bounded_chambers": chambers.iter().filter(|c| c.bounded).count(),
        "witnesses": chambers.iter().map(|c| json!({
            "signs": c.positive.iter().map(|&b| if b { "+" } else { "-" }).collect::<String>(),
            "heft": c.heft,
            "point": point_json(&c.witness),
            "bounded": c.bounded,
        })).collect::<Vec<_>>(),
    });
    report.check(
        "min_heft_chambers_at_most_binomial",
        format!("<= {bound}"),
        min_count,
        min_count <= bound,
    );
    finish(report, &io)
}

fn cmd_hemichambers(io: IoArgs) -> Result<i32, String> {
    let (file, raw) = read_instance(&io)?;
    let Instance::Spherical(normals) = &file.instance else {
        return Err("hemichambers expects mode=spherical (hemisphere normals)".into());
    };
    let census = hemisphere_chambers(normals).map_err(|e| e.to_string())?;
    let mut report = Report::new("hemichambers");
    report.digest_input(&raw);
    report.results = json!({
        "chambers": census.hefts.len(),
        "min_heft": census.min_heft,
        "min_heft_chambers": census.min_heft_count,
        "hefts": census.hefts,
        "restricted_regime": census.restricted_applicable,
    });
    report.check(
        "min_heft_chambers_at_most_general_bound",
        format!("<= {}", census.general_bound),
        census.min_heft_count,
        census.general_bound_ok,
    );
    if census.restricted_applicable {
        report.check(
            "min_heft_chambers_at_most_restricted_bound",
            format!("<= {}", census.restricted_bound),
            census.min_heft_count,
            census.restricted_bound_ok,
        );
    }
    finish(report, &io)
}

fn cmd_hypersimplex(d: usize, p: Option<usize>) -> Result<i32, String> {
    if d == 0 {
        return Err("hypersimplex needs d >= 1".into());
    }
    let table = eulerian(d);
    let mut report = Report::new("hypersimplex");
    report.param("d", d);
    let ps: Vec<usize> = match p {
        Some(p) if (1..=d).contains(&p) => vec![p],
        Some(p) => return Err(format!("p = {p} out of range 1..={d}")),
        None => (1..=d).collect(),
    };
    let mut rows = Vec::new();
    for &p in &ps {
        let v = hypersimplex_relative_volume(d, p);
        let a = table.value(p - 1).clone();
        let matches = v == Scalar::from_integer(a.clone());
        rows.push(json!({
            "p": p,
            "relative_volume": format_scalar(&v),
            "eulerian": a.to_string(),
        }));
        report.check(
            &format!("laplace_relation_p{p}"),
            a.to_string(),
            format_scalar(&v),
            matches,
        );
    }
    report.results = json!({ "volumes": rows });
    let io = IoArgs { input: None, output: None };
    finish(report, &io)
}

fn cmd_worpitzky(d: usize, n: usize) -> Result<i32, String> {
    if d == 0 || n == 0 {
        return Err("worpitzky needs d >= 1 and n >= 1".into());
    }
    let table = eulerian(d);
    let mut lhs = num::BigInt::from(0);
    for (k, a) in table.values.iter().enumerate() {
        lhs += a * hefty_core::apps::binomial(n + k, d);
    }
    let rhs = num::BigInt::from(n).pow(d as u32);
    let mut report = Report::new("worpitzky");
    report.param("d", d);
    report.param("n", n);
    report.results = json!({
        "worpitzky_lhs": lhs.to_string(),
        "rhs": rhs.to_string(),
    });
    report.check("worpitzky_identity", rhs.to_string(), lhs.to_string(), worpitzky_check(d, n));
    report.check(
        "hypersimplex_identity",
        rhs.to_string(),
        "sum_p v(d,p) C(n+d-p, n-p)",
        hypersimplex_identity_check(d, n),
    );
    let io = IoArgs { input: None, output: None };
    finish(report, &io)
}

fn cmd_mosaic(n: usize, query: Option<&str>, io: IoArgs) -> Result<i32, String> {
    let (file, raw) = read_instance(&io)?;
    let Instance::Euclidean(set) = &file.instance else {
        return Err("mosaic expects mode=euclidean".into());
    };
    let cells = order_n_mosaic_cells(set, n).map_err(|e| e.to_string())?;
    let mut by_p = std::collections::BTreeMap::new();
    for c in &cells {
        *by_p.entry(c.p).or_insert(0usize) += 1;
    }
    let mut report = Report::new("mosaic");
    report.digest_input(&raw);
    report.param("n", n);
    report.results = json!({
        "cells": cells.len(),
        "cells_by_order": by_p,
    });
    if let Some(query) = query {
        let q = parse_query(query, set.dim())?;
        let mut inside = 0usize;
        let mut boundary = false;
        for cell in &cells {
            match hefty_core::apps::cell_contains(set, cell, &q).map_err(|e| e.to_string())? {
                Containment::Interior => inside += 1,
                Containment::Boundary => boundary = true,
                Containment::Outside => {}
            }
        }
        let depth = set.tukey_depth(&q).map_err(|e| e.to_string())?;
        report.param("query", query);
        if let serde_json::Value::Object(map) = &mut report.results {
            map.insert("query_containments".into(), json!(inside));
            map.insert("query_on_boundary".into(), json!(boundary));
            map.insert("query_depth".into(), json!(depth));
        }
        if depth >= 4 && !boundary {
            report.check("deep_query_in_exactly_one_cell", 1, inside, inside == 1);
        } else {
            report.info_check("query_in_one_cell", 1, inside, inside == 1);
        }
    }
    finish(report, &io)
}

fn cmd_gen(target: GenTarget, output: Option<PathBuf>) -> Result<i32, String> {
    let file = match target {
        GenTarget::Pentagon => InputFile {
            dim: 2,
            mode: Mode::Euclidean,
            instance: Instance::Euclidean(gen_pentagon()),
        },
        GenTarget::Radial { d, layers, seed } => InputFile {
            dim: d,
            mode: Mode::Euclidean,
            instance: Instance::Euclidean(gen_radial(d, layers, seed).map_err(|e| e.to_string())?),
        },
        GenTarget::Hexmesh { d, k } => InputFile {
            dim: d,
            mode: Mode::Arrangement,
            instance: Instance::Arrangement(gen_hexmesh(d, k).map_err(|e| e.to_string())?),
        },
        GenTarget::Random { d, n, seed } => InputFile {
            dim: d,
            mode: Mode::Euclidean,
            instance: Instance::Euclidean(
                gen_random_points(d, n, seed).map_err(|e| e.to_string())?,
            ),
        },
        GenTarget::Sphere { d, n, k, seed } => InputFile {
            dim: d,
            mode: Mode::Spherical,
            instance: Instance::Spherical(
                gen_balanced_sphere(d, n, k, seed).map_err(|e| e.to_string())?,
            ),
        },
        GenTarget::PolygonDuals { k } => InputFile {
            dim: 1,
            mode: Mode::Spherical,
            instance: Instance::Spherical(gen_polygon_duals(k).map_err(|e| e.to_string())?),
        },
        GenTarget::RandomArrangement { d, n, seed } => InputFile {
            dim: d,
            mode: Mode::Arrangement,
            instance: Instance::Arrangement(
                gen_random_arrangement(d, n, seed).map_err(|e| e.to_string())?,
            ),
        },
        GenTarget::RandomHemispheres { n, seed } => InputFile {
            dim: 1,
            mode: Mode::Spherical,
            instance: Instance::Spherical(
                gen_random_circle_normals(n, seed).map_err(|e| e.to_string())?,
            ),
        },
    };
    let text = write_input(&file);
    match output {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("writing output: {e}"))?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_render(k: Option<usize>, io: IoArgs) -> Result<i32, String> {
    let (file, _raw) = read_instance(&io)?;
    let svg = match &file.instance {
        Instance::Euclidean(set) => svg::render_euclidean(set, k)?,
        Instance::Arrangement(arr) => svg::render_arrangement(arr)?,
        Instance::Spherical(points) => svg::render_circle(points, k)?,
        Instance::Weighted(set) => svg::render_euclidean(&set.locations(), None)?,
    };
    match &io.output {
        Some(path) => std::fs::write(path, svg).map_err(|e| format!("writing output: {e}"))?,
        None => print!("{svg}"),
    }
    Ok(0)
}
