//! Command-line front end.
//!
//! Exit codes: 0 when every check holds, 1 for malformed input or usage, 2
//! when a check fails (the failing report is printed and, with `--out`,
//! written).

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;
use sublattice_core::reduction::{
    check_normalization, classify_type, lattice_diameter, slab_normalize, PolygonType,
};
use sublattice_core::slopes::{
    check_lemma_ledger, check_pr_slp, check_th3_6, check_th3_8, forms_small_angle, frame_splits,
    maximal_slopes, slope_profile, Frame, SlpHint,
};
use sublattice_core::verifier::{
    check_subtheorem_c, construct_extremal, type_ii_bound_pipeline, FreePolygonSearch, SearchBox,
};
use sublattice_core::{IntVec, Polygon, Report, Sublattice};

use crate::formats::{
    self, read_json, AffineMapJson, ClassificationJson, LatticeJson, PolygonJson, ReportJson,
    SlopeJson, VerificationJson,
};
use crate::{parallel, svg, Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_COUNTEREXAMPLE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "sublattice",
    version,
    about = "Convex lattice polygons avoiding a sublattice of Z^2"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Area, Pick data, lattice diameter, bounding box and maximal slopes.
    Analyze {
        polygon: String,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Moves an nZ^2-free polygon into the slab -n+1 <= x1 <= 2n-1.
    Normalize {
        polygon: String,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Type I-VI of an nZ^2-free polygon and the automorphism realizing it.
    Classify {
        polygon: String,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Frame splitting, small angle, profile and every slope inequality.
    Slopes {
        slope: String,
        #[arg(long, value_parser = parse_pair, allow_hyphen_values = true)]
        origin: IntVec,
        /// A proper lattice holding the slope's vertices.
        #[arg(long)]
        lattice: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Vertex bound for the classified polygon, plus the type II pipeline.
    CheckBounds {
        polygon: String,
        /// The avoided lattice; must be nZ^2.
        #[arg(long)]
        lattice: String,
        /// Lattice holding the vertices (default Z^2).
        #[arg(long)]
        vertex_lattice: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Streams every lattice-free polygon in a box as JSON lines.
    Enumerate {
        #[arg(long)]
        lattice: String,
        #[arg(long = "box", value_parser = parse_box, allow_hyphen_values = true)]
        search_box: SearchBox,
        #[arg(long, default_value_t = 3)]
        min_vertices: usize,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// A lattice-free polygon with nu(delta, n) - 1 vertices.
    Extremal {
        #[arg(long)]
        delta: i64,
        #[arg(long)]
        n: i64,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exhaustive search for the largest lattice-free polygon in a box.
    Verify {
        #[arg(long)]
        lattice: String,
        /// Defaults to [-n+1, 2n-1]^2.
        #[arg(long = "box", value_parser = parse_box, allow_hyphen_values = true)]
        search_box: Option<SearchBox>,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        svg: Option<PathBuf>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_ints(s: &str, k: usize) -> Result<Vec<i64>, String> {
    let v: Vec<i64> = s
        .split(',')
        .map(|t| t.trim().parse::<i64>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()?;
    if v.len() != k {
        return Err(format!("expected {k} comma-separated integers"));
    }
    Ok(v)
}

fn parse_pair(s: &str) -> Result<IntVec, String> {
    let v = parse_ints(s, 2)?;
    Ok(IntVec::new(v[0], v[1]))
}

fn parse_box(s: &str) -> Result<SearchBox, String> {
    let v = parse_ints(s, 4)?;
    SearchBox::new(v[0], v[1], v[2], v[3]).map_err(|e| e.to_string())
}

fn read_polygon(arg: &str) -> Result<Polygon, Error> {
    read_json::<PolygonJson>(arg)?.to_polygon()
}

fn read_lattice(arg: &str) -> Result<Sublattice, Error> {
    read_json::<LatticeJson>(arg)?.to_lattice()
}

fn write_file(path: &PathBuf, text: &str) -> Result<(), Error> {
    std::fs::write(path, text).map_err(|e| Error::Io(path.display().to_string(), e))
}

fn write_json<T: Serialize>(path: &Option<PathBuf>, value: &T) -> Result<(), Error> {
    if let Some(path) = path {
        let text = serde_json::to_string_pretty(value).map_err(|e| Error::Input(e.to_string()))?;
        write_file(path, &(text + "\n"))?;
    }
    Ok(())
}

fn write_svg(
    path: &Option<PathBuf>,
    p: &Polygon,
    lattice: Option<&Sublattice>,
) -> Result<(), Error> {
    match path {
        Some(path) => write_file(path, &svg::polygon_svg(p, lattice)),
        None => Ok(()),
    }
}

fn n_lattice(n: i64) -> Result<Sublattice, Error> {
    if n < 2 {
        return Err(Error::Input("--n must be at least 2".into()));
    }
    Ok(Sublattice::scaled(n)?)
}

fn status(reports: &[&Report]) -> i32 {
    if reports.iter().all(|r| r.is_ok()) {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{e}")
            } else {
                write!(out, "{e}")
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_USAGE
        }
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, Error> {
    let io = |e: std::io::Error| Error::Io("stdout".into(), e);
    match cmd {
        Command::Analyze {
            polygon,
            svg,
            out: path,
        } => {
            let p = read_polygon(&polygon)?;
            let pick = p.pick_data();
            let d = lattice_diameter(&p);
            let st = p.bounding_stats();
            let ms = maximal_slopes(&p)?;
            writeln!(out, "vertices    {}", p.vertex_count()).map_err(io)?;
            writeln!(out, "area2       {}", pick.area2).map_err(io)?;
            writeln!(out, "interior    {}", pick.interior).map_err(io)?;
            writeln!(out, "boundary    {}", pick.boundary).map_err(io)?;
            writeln!(out, "diameter    {}", d.length).map_err(io)?;
            writeln!(
                out,
                "S S- S+     {} {} {}",
                st.south, st.south_minus, st.south_plus
            )
            .map_err(io)?;
            writeln!(
                out,
                "E E- E+     {} {} {}",
                st.east, st.east_minus, st.east_plus
            )
            .map_err(io)?;
            writeln!(
                out,
                "N N- N+     {} {} {}",
                st.north, st.north_minus, st.north_plus
            )
            .map_err(io)?;
            writeln!(
                out,
                "W W- W+     {} {} {}",
                st.west, st.west_minus, st.west_plus
            )
            .map_err(io)?;
            writeln!(out, "N_k         {:?}", ms.edge_counts).map_err(io)?;
            writeln!(out, "M_k         {:?}", ms.m).map_err(io)?;
            write_svg(&svg, &p, None)?;
            write_json(
                &path,
                &json!({
                    "polygon": PolygonJson::from(&p),
                    "area2": pick.area2,
                    "interior": pick.interior,
                    "boundary": pick.boundary,
                    "diameter": d.length,
                    "diameter_segment": [formats::pair(d.segment.a), formats::pair(d.segment.b)],
                    "bounding": {
                        "south": [st.south, st.south_minus, st.south_plus],
                        "east": [st.east, st.east_minus, st.east_plus],
                        "north": [st.north, st.north_minus, st.north_plus],
                        "west": [st.west, st.west_minus, st.west_plus],
                    },
                    "slopes": ms.slopes.iter().map(SlopeJson::from).collect::<Vec<_>>(),
                    "n_k": ms.edge_counts,
                    "m_k": ms.m,
                }),
            )?;
            Ok(EXIT_OK)
        }
        Command::Normalize {
            polygon,
            n,
            svg,
            out: path,
        } => {
            let p = read_polygon(&polygon)?;
            n_lattice(n)?;
            let r = slab_normalize(&p, n)?;
            let report = check_normalization(&p, n, &r);
            let value = json!({
                "map": AffineMapJson::from(&r.map),
                "image": PolygonJson::from(&r.image),
                "diameter_line_c": r.diameter_line_c,
                "diameter": r.diameter,
                "report": ReportJson::from(&report),
            });
            writeln!(
                out,
                "{}",
                serde_json::to_string(&value).expect("serializable")
            )
            .map_err(io)?;
            write_svg(&svg, &r.image, Some(&Sublattice::scaled(n)?))?;
            write_json(&path, &value)?;
            Ok(status(&[&report]))
        }
        Command::Classify {
            polygon,
            n,
            svg,
            out: path,
        } => {
            let p = read_polygon(&polygon)?;
            n_lattice(n)?;
            let c = classify_type(&p, n)?;
            let value = ClassificationJson::from(&c);
            writeln!(
                out,
                "{}",
                serde_json::to_string(&value).expect("serializable")
            )
            .map_err(io)?;
            write_svg(&svg, &c.image, Some(&Sublattice::scaled(n)?))?;
            write_json(&path, &value)?;
            Ok(EXIT_OK)
        }
        Command::Slopes {
            slope,
            origin,
            lattice,
            out: path,
        } => {
            let q = read_json::<SlopeJson>(&slope)?.to_slope()?;
            let (f1, f2) = q.basis();
            let frame = Frame::new(origin, f1, f2)?;
            let lattice = lattice.as_deref().map(read_lattice).transpose()?;
            let splits = frame_splits(&frame, &q)?;
            writeln!(out, "splits      {splits}").map_err(io)?;
            let mut reports = Vec::new();
            if q.edge_count() > 0 {
                let hint = SlpHint {
                    lattice,
                    coset: None,
                };
                reports.push(check_pr_slp(&q, &hint)?);
            }
            let mut value = json!({ "splits": splits });
            if splits {
                let small = forms_small_angle(&frame, &q)?;
                let prof = slope_profile(&frame, &q)?;
                writeln!(out, "small angle {small}").map_err(io)?;
                writeln!(
                    out,
                    "k alpha t s {} {} {} {}",
                    prof.k, prof.alpha, prof.t, prof.s
                )
                .map_err(io)?;
                writeln!(
                    out,
                    "pi1 pi2 pihat (E1, E2) {} {} {} ({}, {})",
                    prof.pi1_e, prof.pi2_e, prof.pihat_e, prof.pihat_e1, prof.pihat_e2
                )
                .map_err(io)?;
                value["small_angle"] = json!(small);
                value["profile"] = json!({
                    "k": prof.k,
                    "alpha": [*prof.alpha.numer(), *prof.alpha.denom()],
                    "t": prof.t,
                    "s": prof.s,
                    "s_edges": prof.s_edges,
                    "delta_flag": prof.delta_flag,
                    "pi1_e": prof.pi1_e,
                    "pi2_e": prof.pi2_e,
                    "pihat_e": prof.pihat_e,
                    "pihat_e1": prof.pihat_e1,
                    "pihat_e2": prof.pihat_e2,
                });
                reports.push(check_th3_6(&frame, &q)?);
                reports.push(check_lemma_ledger(
                    &frame,
                    &q,
                    lattice.as_ref().filter(|l| l.is_proper()),
                )?);
                if let Some(l) = lattice.as_ref().filter(|l| l.is_proper()) {
                    reports.push(check_th3_8(&frame, &q, l)?);
                }
            }
            for r in &reports {
                write!(out, "{r}").map_err(io)?;
            }
            value["reports"] = json!(reports.iter().map(ReportJson::from).collect::<Vec<_>>());
            write_json(&path, &value)?;
            Ok(status(&reports.iter().collect::<Vec<_>>()))
        }
        Command::CheckBounds {
            polygon,
            lattice,
            vertex_lattice,
            out: path,
        } => {
            let p = read_polygon(&polygon)?;
            let l = read_lattice(&lattice)?;
            let (delta, n) = l.invariant_factors();
            if delta != n || l != Sublattice::scaled(n)? {
                return Err(Error::Input("check-bounds needs the lattice nZ^2".into()));
            }
            let gamma = match vertex_lattice {
                Some(g) => read_lattice(&g)?,
                None => Sublattice::integer_lattice(),
            };
            let c = classify_type(&p, n)?;
            let gamma_image = Sublattice::new(c.map.linear.compose(&gamma.basis())?)?;
            writeln!(out, "type        {}", c.tag.kind).map_err(io)?;
            let mut reports = Vec::new();
            if n >= 3 {
                reports.push(check_subtheorem_c(&c.image, c.tag, &gamma_image)?);
                if c.tag.kind == PolygonType::II {
                    reports.push(type_ii_bound_pipeline(&c.image, n, &gamma_image)?);
                }
            } else {
                writeln!(out, "the vertex bound needs n >= 3").map_err(io)?;
            }
            for r in &reports {
                write!(out, "{r}").map_err(io)?;
            }
            write_json(
                &path,
                &json!({
                    "classification": ClassificationJson::from(&c),
                    "vertex_lattice": formats::LatticeOut::from(&gamma_image),
                    "reports": reports.iter().map(ReportJson::from).collect::<Vec<_>>(),
                }),
            )?;
            Ok(status(&reports.iter().collect::<Vec<_>>()))
        }
        Command::Enumerate {
            lattice,
            search_box,
            min_vertices,
            jobs,
        } => {
            let l = read_lattice(&lattice)?;
            let search = FreePolygonSearch::new(&l, search_box);
            for p in parallel::enumerate(&search, min_vertices, jobs)? {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&PolygonJson::from(&p)).expect("serializable")
                )
                .map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Extremal {
            delta,
            n,
            svg,
            out: path,
        } => {
            let p = construct_extremal(delta, n)?;
            let value = PolygonJson::from(&p);
            writeln!(
                out,
                "{}",
                serde_json::to_string(&value).expect("serializable")
            )
            .map_err(io)?;
            write_svg(&svg, &p, Some(&Sublattice::from_invariants(delta, n)?))?;
            write_json(&path, &value)?;
            Ok(EXIT_OK)
        }
        Command::Verify {
            lattice,
            search_box,
            jobs,
            svg,
            out: path,
        } => {
            let l = read_lattice(&lattice)?;
            let b = search_box.unwrap_or_else(|| SearchBox::default_for(l.invariant_factors().1));
            let r = parallel::verify(&l, b, jobs)?;
            let value = VerificationJson::new(&r, jobs);
            writeln!(
                out,
                "max {} nu {} consistent {} instances {} box [{},{}]x[{},{}]",
                r.max_vertices_found,
                r.nu,
                r.consistent,
                r.instances_checked,
                b.x1_min,
                b.x1_max,
                b.x2_min,
                b.x2_max
            )
            .map_err(io)?;
            if path.is_none() {
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string(&value).expect("serializable")
                )
                .map_err(io)?;
            }
            if let Some(w) = &r.witness {
                write_svg(&svg, w, Some(&l))?;
            }
            write_json(&path, &value)?;
            Ok(if r.consistent {
                EXIT_OK
            } else {
                EXIT_COUNTEREXAMPLE
            })
        }
    }
}
