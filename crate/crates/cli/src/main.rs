use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use front_atlas::config::ORDER_ENV;
use front_atlas::corpus::{generate_corpus, CorpusKind};
use front_atlas::frontal::{build_frame, classify_front_point, edge_invariants, fundamentals, PointGeometry};
use front_atlas::gauss::{contact_order, gauss_classify, rational_k_status};
use front_atlas::height::{d4_classify, extended_height};
use front_atlas::trace::{trace_zero_curve, FieldTag, SurfaceField};
use front_atlas::{parse_surface, print_surface, run_report, Config, Error, SurfaceDef};
use serde_json::{json, Value};

#[derive(Parser, Debug)]
#[command(name = "front-atlas", version, about = "Singularities, curvatures and Gauss maps of wave fronts")]
struct Cli {
    /// Jet order used for every evaluation; overrides the surface file's `order`.
    #[arg(long, global = true, env = ORDER_ENV)]
    order: Option<usize>,
    /// Relative zero tolerance for classification witnesses.
    #[arg(long, global = true, default_value_t = 1e-8)]
    tol: f64,
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Emit JSON instead of `key = value` lines.
    #[arg(long, global = true)]
    json: bool,
    /// Write polylines as CSV to this path.
    #[arg(long, global = true, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Print the effective configuration and exit.
    #[arg(long, global = true)]
    show_config: bool,
    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(clap::Args, Debug)]
struct At {
    /// Surface file.
    file: PathBuf,
    /// Point `u,v` in the surface parameters.
    #[arg(long, value_parser = parse_point, allow_hyphen_values = true, default_value = "0,0")]
    at: [f64; 2],
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Singular point type of the front.
    Classify(At),
    /// Cuspidal-edge invariants, or μ_c at a second-kind point.
    Invariants(At),
    /// Gauss-map singularity with the witnesses of every route.
    Gauss(At),
    /// Contact of singular and parabolic curves, and rational boundedness of K.
    Contact(At),
    /// Extended height function and its D4 type.
    Height(At),
    /// Trace the singular (`lambda`) or parabolic (`kappa`) curve through a seed.
    Trace {
        #[command(flatten)]
        at: At,
        #[arg(long, default_value = "kappa", value_parser = ["lambda", "kappa"])]
        field: String,
        #[arg(long, default_value_t = 0.02)]
        step: f64,
        /// Steps in each direction.
        #[arg(long, default_value_t = 50)]
        count: usize,
    },
    /// Generate random adapted fronts.
    Corpus {
        #[arg(long, value_parser = ["first", "second"])]
        kind: String,
        #[arg(long, default_value_t = 10)]
        count: usize,
        /// Directory for `.surf` files; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Every stage at one point.
    Report(At),
}

fn parse_point(s: &str) -> Result<[f64; 2], String> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| format!("expected u,v but got '{s}'"))?;
    let p = |x: &str| x.trim().parse::<f64>().map_err(|e| format!("'{x}': {e}"));
    Ok([p(a)?, p(b)?])
}

/// Parses a surface file. An explicit `--order` (or the environment) replaces
/// the file's own order.
fn load(path: &Path, order: Option<usize>) -> Result<SurfaceDef, Error> {
    let src = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    let mut def = parse_surface(&src)?;
    if def.name.is_empty() {
        def.name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    }
    if let Some(n) = order {
        def.order = n;
    }
    Ok(def)
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

/// `a.b[0].c = 1` lines for a JSON value.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&p, x, out);
            }
        }
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let items: Vec<String> = a.iter().map(Value::to_string).collect();
            out.push(format!("{prefix} = [{}]", items.join(", ")));
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        Value::String(s) => out.push(format!("{prefix} = {s}")),
        Value::Null => out.push(format!("{prefix} = -")),
        x => out.push(format!("{prefix} = {x}")),
    }
}

fn emit(v: &Value, as_json: bool) -> io::Result<()> {
    let mut out = io::stdout().lock();
    if as_json {
        serde_json::to_writer_pretty(&mut out, v)?;
        writeln!(out)
    } else {
        let mut lines = Vec::new();
        flatten("", v, &mut lines);
        for l in lines {
            writeln!(out, "{l}")?;
        }
        Ok(())
    }
}

fn config(cli: &Cli) -> Config {
    let mut c = Config::default();
    if let Some(n) = cli.order {
        c.order = n;
    }
    c.seed = cli.seed;
    c.tol.classify = cli.tol;
    c.tol.ridge = cli.tol;
    c
}

fn run(cli: &Cli) -> Result<(), Error> {
    let cfg = config(cli);
    let tol = &cfg.tol;
    if cli.show_config {
        let v = json!({ "config": to_value(&cfg), "order_env": ORDER_ENV });
        return emit(&v, cli.json).map_err(io_err);
    }
    let Some(cmd) = &cli.command else {
        return Err(Error::Usage("no command given (try --help)".into()));
    };
    let value = match cmd {
        Command::Classify(a) => {
            let def = load(&a.file, cli.order)?;
            let fr = build_frame(&def, a.at, def.order, tol)?;
            let rep = classify_front_point(&fr, tol)?;
            json!({ "point": a.at, "point_kind": to_value(&fr.kind), "chart": to_value(&fr.chart), "singularity": to_value(&rep) })
        }
        Command::Invariants(a) => {
            let def = load(&a.file, cli.order)?;
            let fr = build_frame(&def, a.at, def.order, tol)?;
            let fd = fundamentals(&fr)?;
            let invs = edge_invariants(&fr, &fd)?;
            json!({ "point": a.at, "invariants": to_value(&invs.values()) })
        }
        Command::Gauss(a) => {
            let def = load(&a.file, cli.order)?;
            let g = PointGeometry::at(&def, a.at, def.order, tol)?;
            let rep = gauss_classify(&g.frame, &g.principal, tol)?;
            json!({ "point": a.at, "gauss": to_value(&rep) })
        }
        Command::Contact(a) => {
            let def = load(&a.file, cli.order)?;
            let fr = build_frame(&def, a.at, def.order, tol)?;
            let fd = fundamentals(&fr)?;
            let invs = edge_invariants(&fr, &fd)?;
            let status = rational_k_status(&invs, tol)?;
            let c = contact_order(&invs, cfg.max_contact, tol)?;
            json!({ "point": a.at, "contact": c.label(), "report": to_value(&c), "rational_k": status.name() })
        }
        Command::Height(a) => {
            let def = load(&a.file, cli.order)?;
            let g = PointGeometry::at(&def, a.at, def.order, tol)?;
            let hc = extended_height(&g.frame)?;
            let rep = d4_classify(&hc, &g.frame, &g.fund, &g.principal, tol)?;
            json!({
                "point": a.at,
                "direction": hc.direction,
                "offset": hc.offset,
                "strongly_adapted": hc.strongly_adapted,
                "height": to_value(&rep),
            })
        }
        Command::Trace { at, field, step, count } => {
            let def = load(&at.file, cli.order)?;
            let tag = FieldTag::from_name(field).expect("clap restricts the field name");
            let f = SurfaceField {
                def: &def,
                tag,
                order: def.order,
                tol: *tol,
            };
            let poly = trace_zero_curve(&f, at.at, *step, *count, tol.trace)?;
            match (&cli.csv, cli.json) {
                (Some(path), _) => {
                    write_csv(&poly, fs::File::create(path).map_err(io_err)?)?;
                    json!({ "points": poly.points.len(), "csv": path.display().to_string() })
                }
                (None, true) => to_value(&poly),
                (None, false) => return write_csv(&poly, io::stdout().lock()),
            }
        }
        Command::Corpus { kind, count, out } => {
            let kind = CorpusKind::from_name(kind).expect("clap restricts the kind");
            let defs = generate_corpus(cfg.seed, *count, kind)?;
            match out {
                Some(dir) => {
                    fs::create_dir_all(dir).map_err(io_err)?;
                    let mut files = Vec::new();
                    for d in &defs {
                        let p = dir.join(format!("{}.surf", d.name));
                        fs::write(&p, print_surface(d)).map_err(io_err)?;
                        files.push(p.display().to_string());
                    }
                    json!({ "written": files })
                }
                None => {
                    let mut o = io::stdout().lock();
                    for d in &defs {
                        writeln!(o, "{}", print_surface(d)).map_err(io_err)?;
                    }
                    return Ok(());
                }
            }
        }
        Command::Report(a) => {
            let def = load(&a.file, cli.order)?;
            let cfg = Config { order: def.order, ..cfg };
            to_value(&run_report(&def, a.at, &cfg)?)
        }
    };
    emit(&value, cli.json).map_err(io_err)
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Io(e.to_string())
}

fn write_csv(poly: &front_atlas::trace::Polyline, w: impl Write) -> Result<(), Error> {
    let mut w = csv::Writer::from_writer(w);
    w.write_record(["u", "v", "residual"]).map_err(io_err)?;
    for r in poly.rows() {
        w.serialize(r).map_err(io_err)?;
    }
    w.flush().map_err(io_err)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error[{}]: {e}", e.kind_name());
            ExitCode::from(e.category().exit_code() as u8)
        }
    }
}
