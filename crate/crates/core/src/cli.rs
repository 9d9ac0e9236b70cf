//! Command-line front end.
//!
//! Model files are read from disk, or from the built-in catalog when the
//! path has the form `catalog:<name>`. Every command renders either an
//! aligned text table or pretty JSON; output depends only on the input.

use std::fmt::Write as _;
use std::fs;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::BigRational;
use serde_json::{json, Map, Value};

use crate::catalog;
use crate::cyclo::format_rational;
use crate::error::{Error, Result};
use crate::group::{FiniteMatrixGroup, DEFAULT_CLOSURE_CAP};
use crate::io;
use crate::models::{self, CohomologyTable, Degree, TorusModel};
use crate::orbicurve::{self, GlueReport, Mark, OrbiBundleData};
use crate::ring::{self, GradedRing};
use crate::sectors::{multi_sectors, obstruction_rank, sector_table};

/// Exit code for a failed `--verify` or `--oracle` check.
pub const VERIFY_FAILED: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "orbcoh", version, about = "Exact orbifold cohomology of finite-group orbifold models")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Upper bound on the number of group elements produced by closure.
    #[arg(long, global = true, env = "ORBCOH_CAP", default_value_t = DEFAULT_CLOSURE_CAP)]
    pub cap: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelKind {
    Point,
    Linear,
    Torus,
    Wp,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Twisted sectors, or k-multi-sectors with --k.
    Sectors {
        file: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long)]
        product_one: bool,
    },
    /// Orbifold Betti numbers of a torus quotient.
    Betti {
        #[arg(long, value_enum)]
        model: ModelKind,
        file: String,
    },
    /// Orbifold Hodge numbers of a linear quotient.
    Hodge {
        #[arg(long, value_enum)]
        model: ModelKind,
        file: String,
    },
    /// Orbifold cohomology of a point quotient.
    Cohomology {
        #[arg(long, value_enum)]
        model: ModelKind,
        file: String,
    },
    /// Orbifold cup-product ring.
    Ring(RingArgs),
    /// Poincaré pairing matrix.
    Pairing(RingArgs),
    /// Closed-form catalog families and the built-in example files.
    #[command(subcommand)]
    Catalog(CatalogCommand),
    /// Bundles over 2-orbifolds.
    #[command(subcommand)]
    Orbicurve(OrbicurveCommand),
}

#[derive(Args, Debug)]
pub struct RingArgs {
    #[arg(long, value_enum)]
    pub model: ModelKind,
    pub file: Option<String>,
    #[arg(long)]
    pub d1: Option<u64>,
    #[arg(long)]
    pub d2: Option<u64>,
    /// Check the ring axioms; exits 4 on failure.
    #[arg(long)]
    pub verify: bool,
    /// Compare with the group-algebra centre (point model only).
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Subcommand, Debug)]
pub enum CatalogCommand {
    /// Borcea–Voisin threefold from Nikulin data.
    Bv {
        #[arg(long, allow_hyphen_values = true)]
        r: i64,
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        delta: i64,
    },
    /// Weighted projective line WP(d1, d2).
    Wp {
        #[arg(long)]
        d1: u64,
        #[arg(long)]
        d2: u64,
    },
    /// Names usable as catalog:<name>.
    List,
}

#[derive(Subcommand, Debug)]
pub enum OrbicurveCommand {
    /// Euler characteristic of a bundle given by its classification data.
    Chi {
        #[arg(long)]
        genus: u64,
        #[arg(long)]
        rank: usize,
        /// m:e1,…,en; repeat for each orbifold point.
        #[arg(long = "mark")]
        marks: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        c: String,
    },
    /// Gluing identities for a product-one 4-tuple of element indices.
    Glue {
        file: String,
        #[arg(long)]
        tuple: String,
    },
}

/// Rendered output and the exit code it should produce.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: i32,
}

impl Outcome {
    fn ok(stdout: String) -> Outcome {
        Outcome { stdout, exit_code: 0 }
    }
}

fn read_source(path: &str) -> Result<String> {
    if let Some(name) = path.strip_prefix("catalog:") {
        return catalog::group_json(name)
            .or_else(|| catalog::torus_json(name))
            .map(str::to_string)
            .ok_or_else(|| Error::Validation(format!("unknown catalog entry \"{name}\"")));
    }
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

pub fn load_group(path: &str, cap: usize) -> Result<FiniteMatrixGroup> {
    io::parse_group_json(&read_source(path)?)
        .map_err(|e| prefix(path, e))?
        .generate(cap)
}

pub fn load_torus(path: &str) -> Result<TorusModel> {
    io::parse_torus_json(&read_source(path)?).map_err(|e| prefix(path, e))
}

fn prefix(path: &str, e: Error) -> Error {
    match e {
        Error::Parse(m) => Error::Parse(format!("{path}: {m}")),
        Error::Validation(m) => Error::Validation(format!("{path}: {m}")),
        other => other,
    }
}

fn require(model: ModelKind, allowed: &[ModelKind], command: &str) -> Result<()> {
    if allowed.contains(&model) {
        Ok(())
    } else {
        let names: Vec<String> = allowed.iter().map(|m| format!("{m:?}").to_lowercase()).collect();
        Err(Error::Validation(format!("{command} supports --model {}", names.join("|"))))
    }
}

fn rat(r: &BigRational) -> String {
    format_rational(r)
}

/// Left-aligned columns separated by two spaces.
fn render_table(headers: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = headers.iter().map(|h| h.chars().count()).collect();
    for row in rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: Vec<&str>| {
        let mut s = String::new();
        for (i, (cell, w)) in cells.iter().zip(&widths).enumerate() {
            if i + 1 == cells.len() {
                s.push_str(cell);
            } else {
                let pad = w - cell.chars().count();
                s.push_str(cell);
                s.push_str(&" ".repeat(pad + 2));
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(headers.to_vec());
    for row in rows {
        line(row.iter().map(String::as_str).collect());
    }
    out
}

fn to_json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

pub fn execute(cli: &Cli) -> Result<Outcome> {
    let fmt = cli.format;
    match &cli.command {
        Command::Sectors { file, k, product_one } => {
            let g = load_group(file, cli.cap)?;
            if *k == 0 {
                return Err(Error::Validation("--k must be at least 1".into()));
            }
            if *k == 1 && !product_one {
                sectors_output(&g, fmt)
            } else {
                multi_sectors_output(&g, *k, *product_one, fmt)
            }
        }
        Command::Betti { model, file } => {
            require(*model, &[ModelKind::Torus], "betti")?;
            let t = models::betti_torus(&load_torus(file)?, cli.cap)?;
            Ok(Outcome::ok(table_output(&t, fmt)))
        }
        Command::Hodge { model, file } => {
            require(*model, &[ModelKind::Linear], "hodge")?;
            let t = models::hodge_linear(&load_group(file, cli.cap)?)?;
            Ok(Outcome::ok(table_output(&t, fmt)))
        }
        Command::Cohomology { model, file } => {
            require(*model, &[ModelKind::Point], "cohomology")?;
            let t = models::cohomology_point(&load_group(file, cli.cap)?);
            Ok(Outcome::ok(table_output(&t, fmt)))
        }
        Command::Ring(args) => ring_command(args, cli.cap, fmt),
        Command::Pairing(args) => {
            require(args.model, &[ModelKind::Point, ModelKind::Wp, ModelKind::Linear], "pairing")?;
            let r = build_ring(args, cli.cap)?;
            let p = ring::pairing_matrix(&r)?;
            Ok(Outcome::ok(pairing_output(&r, p, fmt)))
        }
        Command::Catalog(CatalogCommand::Bv { r, a, delta }) => {
            let bv = models::catalog_bv(*r, *a, *delta)?;
            Ok(Outcome::ok(match fmt {
                Format::Json => {
                    let mut v = io::table_to_json(&bv.table);
                    let obj = v.as_object_mut().expect("table JSON is an object");
                    let mut head = Map::new();
                    head.insert("r".into(), json!(bv.r));
                    head.insert("a".into(), json!(bv.a));
                    head.insert("delta".into(), json!(bv.delta));
                    head.insert("genus".into(), json!(bv.genus));
                    head.insert("rational_curves".into(), json!(bv.rational_curves));
                    head.insert("h11".into(), json!(bv.h11));
                    head.insert("h21".into(), json!(bv.h21));
                    head.extend(std::mem::take(obj));
                    to_json_text(&Value::Object(head))
                }
                Format::Table => {
                    let mut s = format!(
                        "r={} a={} delta={}  genus={} rational_curves={}\nh11={} h21={}\n\n",
                        bv.r, bv.a, bv.delta, bv.genus, bv.rational_curves, bv.h11, bv.h21
                    );
                    s.push_str(&table_text(&bv.table));
                    s
                }
            }))
        }
        Command::Catalog(CatalogCommand::Wp { d1, d2 }) => {
            Ok(Outcome::ok(table_output(&models::catalog_wp(*d1, *d2)?, fmt)))
        }
        Command::Catalog(CatalogCommand::List) => {
            let groups: Vec<&str> = catalog::GROUP_FILES.iter().map(|(n, _)| *n).collect();
            let tori: Vec<&str> = catalog::TORUS_FILES.iter().map(|(n, _)| *n).collect();
            Ok(Outcome::ok(match fmt {
                Format::Json => to_json_text(&json!({ "groups": groups, "tori": tori })),
                Format::Table => format!("groups: {}\ntori: {}\n", groups.join(" "), tori.join(" ")),
            }))
        }
        Command::Orbicurve(OrbicurveCommand::Chi { genus, rank, marks, c }) => {
            let marks = marks.iter().map(|m| m.parse::<Mark>()).collect::<Result<Vec<_>>>()?;
            let data = OrbiBundleData::new(*genus, *rank, marks, c)?;
            let desing = orbicurve::classify_validate(&data)?;
            let chi = orbicurve::euler_characteristic(&data)?;
            Ok(Outcome::ok(match fmt {
                Format::Json => to_json_text(&json!({
                    "genus": data.genus,
                    "rank": data.rank,
                    "marks": data.marks.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                    "c": rat(&data.c),
                    "desing_chern": desing.to_string(),
                    "chi": chi.to_string(),
                })),
                Format::Table => format!("desing_chern  {desing}\nchi           {chi}\n"),
            }))
        }
        Command::Orbicurve(OrbicurveCommand::Glue { file, tuple }) => {
            let g = load_group(file, cli.cap)?;
            let t = parse_tuple(tuple, g.order())?;
            let report = orbicurve::glue_index_check(&g, &t)?;
            let mut out = Outcome::ok(glue_output(&t, &report, fmt));
            if !report.holds() {
                out.exit_code = VERIFY_FAILED;
            }
            Ok(out)
        }
    }
}

fn parse_tuple(s: &str, order: usize) -> Result<[usize; 4]> {
    let parts = s
        .split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| Error::Parse(format!("--tuple: \"{p}\" is not an index"))))
        .collect::<Result<Vec<_>>>()?;
    let t: [usize; 4] = parts
        .try_into()
        .map_err(|_| Error::Validation("--tuple needs exactly 4 element indices".into()))?;
    if let Some(bad) = t.iter().find(|&&i| i >= order) {
        return Err(Error::Validation(format!("--tuple: index {bad} out of range for a group of order {order}")));
    }
    Ok(t)
}

fn exponents_text(e: &[u64]) -> String {
    e.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn sectors_output(g: &FiniteMatrixGroup, fmt: Format) -> Result<Outcome> {
    let table = sector_table(g)?;
    Ok(Outcome::ok(match fmt {
        Format::Json => to_json_text(&io::sector_table_to_json(g, &table)),
        Format::Table => {
            let rows: Vec<Vec<String>> = table
                .sectors()
                .iter()
                .map(|s| {
                    vec![
                        s.label(),
                        s.class_size.to_string(),
                        s.centralizer_order.to_string(),
                        s.exponents.order.to_string(),
                        rat(&s.iota),
                        s.fixed_dim.to_string(),
                        exponents_text(&s.exponents.exponents),
                    ]
                })
                .collect();
            let mut s = format!("|G| = {}  n = {}  SL = {}\n", g.order(), g.dim(), g.is_sl());
            s.push_str(&render_table(&["sector", "class", "|C(g)|", "order", "iota", "dim V^g", "exponents"], &rows));
            s
        }
    }))
}

fn multi_sectors_output(g: &FiniteMatrixGroup, k: usize, product_one: bool, fmt: Format) -> Result<Outcome> {
    let table = sector_table(g)?;
    let ms = multi_sectors(g, &table, k, product_one)?;
    let labels: Vec<String> = table.sectors().iter().map(|s| s.label()).collect();
    let obstruction = |t: &[usize]| -> Result<Option<u64>> {
        if product_one {
            obstruction_rank(g, &table, t).map(Some)
        } else {
            Ok(None)
        }
    };
    Ok(Outcome::ok(match fmt {
        Format::Json => {
            let items = ms
                .iter()
                .map(|m| {
                    Ok(json!({
                        "tuple": m.class.representative,
                        "orbit_size": m.class.members.len(),
                        "centralizer_order": m.class.centralizer_order,
                        "iotas": m.iotas.iter().map(rat).collect::<Vec<_>>(),
                        "joint_fixed_dim": m.joint_fixed_dim,
                        "evaluations": m.evaluations.iter().map(|&e| labels[e].clone()).collect::<Vec<_>>(),
                        "product_sector": labels[m.product_sector],
                        "obstruction_rank": obstruction(&m.class.representative)?,
                    }))
                })
                .collect::<Result<Vec<_>>>()?;
            to_json_text(&json!({ "k": k, "product_one": product_one, "multi_sectors": items }))
        }
        Format::Table => {
            let mut rows = Vec::with_capacity(ms.len());
            for m in &ms {
                let tuple: Vec<String> = m.class.representative.iter().map(usize::to_string).collect();
                let mut row = vec![
                    format!("({})", tuple.join(",")),
                    m.class.members.len().to_string(),
                    m.class.centralizer_order.to_string(),
                    m.iotas.iter().map(rat).collect::<Vec<_>>().join(","),
                    m.joint_fixed_dim.to_string(),
                    labels[m.product_sector].clone(),
                ];
                if let Some(r) = obstruction(&m.class.representative)? {
                    row.push(r.to_string());
                }
                rows.push(row);
            }
            let mut headers = vec!["tuple", "orbit", "|C|", "iotas", "dim V^g", "product"];
            if product_one {
                headers.push("obstruction");
            }
            let mut s = format!("k = {k}  product_one = {product_one}  classes = {}\n", ms.len());
            s.push_str(&render_table(&headers, &rows));
            s
        }
    }))
}

fn table_text(t: &CohomologyTable) -> String {
    let bigraded = t.entries.keys().any(|d| matches!(d, Degree::Bi(..)));
    let rows: Vec<Vec<String>> = t.entries.iter().map(|(d, v)| vec![d.to_string(), v.to_string()]).collect();
    let mut s = render_table(&[if bigraded { "p,q" } else { "degree" }, "dim"], &rows);
    let _ = writeln!(s, "total  {}", t.total());
    s.push_str("\nsectors:\n");
    let rows: Vec<Vec<String>> = t
        .sectors
        .iter()
        .map(|sec| {
            let parts: Vec<String> = sec.entries.iter().map(|(d, v)| format!("[{d}]={v}")).collect();
            vec![sec.label.clone(), rat(&sec.shift), parts.join(" ")]
        })
        .collect();
    s.push_str(&render_table(&["sector", "iota", "contribution"], &rows));
    s
}

fn table_output(t: &CohomologyTable, fmt: Format) -> String {
    match fmt {
        Format::Json => to_json_text(&io::table_to_json(t)),
        Format::Table => table_text(t),
    }
}

fn build_ring(args: &RingArgs, cap: usize) -> Result<GradedRing> {
    let file = || {
        args.file
            .as_deref()
            .ok_or_else(|| Error::Validation("a group file is required for this model".into()))
    };
    match args.model {
        ModelKind::Point => ring::ring_point(&load_group(file()?, cap)?),
        ModelKind::Linear => ring::ring_linear(&load_group(file()?, cap)?),
        ModelKind::Wp => match (args.d1, args.d2) {
            (Some(d1), Some(d2)) => ring::ring_wp(d1, d2),
            _ => Err(Error::Validation("--model wp needs --d1 and --d2".into())),
        },
        ModelKind::Torus => Err(Error::Validation("ring supports --model point|linear|wp".into())),
    }
}

fn describe(ring: &GradedRing, v: &[(usize, BigRational)]) -> String {
    v.iter()
        .map(|(k, c)| {
            if *c == BigRational::from_integer(1.into()) {
                format!("x[{}]", ring.labels[*k])
            } else {
                format!("{}*x[{}]", rat(c), ring.labels[*k])
            }
        })
        .collect::<Vec<_>>()
        .join(" + ")
}

fn ring_command(args: &RingArgs, cap: usize, fmt: Format) -> Result<Outcome> {
    if args.oracle && args.model != ModelKind::Point {
        return Err(Error::Validation("--oracle is only available for --model point".into()));
    }
    let r = build_ring(args, cap)?;
    let report = args.verify.then(|| ring::verify_ring(&r));
    let oracle = if args.oracle {
        let g = load_group(args.file.as_deref().expect("point model has a file"), cap)?;
        let o = ring::center_oracle(&g);
        Some(o.structure == r.structure)
    } else {
        None
    };
    let mut stdout = match fmt {
        Format::Json => {
            let mut v = ring::ring_to_json(&r);
            let obj = v.as_object_mut().expect("ring JSON is an object");
            if let Some(rep) = &report {
                obj.insert("verify".into(), rep.to_json());
            }
            if let Some(m) = oracle {
                obj.insert("oracle_match".into(), json!(m));
            }
            to_json_text(&v)
        }
        Format::Table => {
            let rows: Vec<Vec<String>> = r
                .labels
                .iter()
                .zip(&r.degrees)
                .enumerate()
                .map(|(i, (l, d))| vec![i.to_string(), format!("x[{l}]"), d.to_string()])
                .collect();
            let mut s = render_table(&["index", "basis", "degree"], &rows);
            s.push_str("\nproducts:\n");
            for (&(i, j), terms) in &r.structure {
                let _ = writeln!(s, "x[{}] * x[{}] = {}", r.labels[i], r.labels[j], describe(&r, terms));
            }
            if let Some(rep) = &report {
                s.push_str("\nverify:\n");
                s.push_str(&rep.to_string());
            }
            if let Some(m) = oracle {
                let _ = writeln!(s, "\noracle match: {}", if m { "exact" } else { "MISMATCH" });
            }
            s
        }
    };
    let failed = report.as_ref().is_some_and(|r| !r.passed()) || oracle == Some(false);
    if fmt == Format::Table && !stdout.ends_with('\n') {
        stdout.push('\n');
    }
    Ok(Outcome { stdout, exit_code: if failed { VERIFY_FAILED } else { 0 } })
}

fn pairing_output(r: &GradedRing, p: &[Vec<BigRational>], fmt: Format) -> String {
    match fmt {
        Format::Json => to_json_text(&json!({
            "model": r.model,
            "basis": r.labels,
            "pairing": p.iter().map(|row| row.iter().map(rat).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "determinant": rat(&ring::determinant(p)),
        })),
        Format::Table => {
            let mut headers = vec![String::new()];
            headers.extend(r.labels.iter().map(|l| format!("x[{l}]")));
            let rows: Vec<Vec<String>> = p
                .iter()
                .enumerate()
                .map(|(i, row)| {
                    let mut cells = vec![format!("x[{}]", r.labels[i])];
                    cells.extend(row.iter().map(rat));
                    cells
                })
                .collect();
            let h: Vec<&str> = headers.iter().map(String::as_str).collect();
            let mut s = render_table(&h, &rows);
            let _ = writeln!(s, "determinant  {}", rat(&ring::determinant(p)));
            s
        }
    }
}

fn glue_output(t: &[usize; 4], r: &GlueReport, fmt: Format) -> String {
    match fmt {
        Format::Json => to_json_text(&json!({
            "tuple": t,
            "chi": [r.left.chi.to_string(), r.right.chi.to_string(), r.glued.chi.to_string()],
            "coker": [r.left.coker.to_string(), r.right.coker.to_string(), r.glued.coker.to_string()],
            "split_fixed_dim": r.split_fixed_dim,
            "excess_rank": r.excess,
            "index_identity": r.index_holds(),
            "coker_identity": r.coker_holds(),
        })),
        Format::Table => {
            let verdict = |b: bool| if b { "holds" } else { "FAILS" };
            format!(
                "tuple ({},{},{},{})\n\
                 index:  {} + {} = {} + {}  {}\n\
                 coker:  {} + {} + {} = {}  {}\n",
                t[0],
                t[1],
                t[2],
                t[3],
                r.left.chi,
                r.right.chi,
                r.glued.chi,
                r.split_fixed_dim,
                verdict(r.index_holds()),
                r.left.coker,
                r.right.coker,
                r.excess,
                r.glued.coker,
                verdict(r.coker_holds())
            )
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(args: &[&str]) -> Result<Outcome> {
        let cli = Cli::try_parse_from(std::iter::once("orbcoh").chain(args.iter().copied())).unwrap();
        execute(&cli)
    }

    #[test]
    fn table_alignment() {
        let t = render_table(&["a", "bb"], &[vec!["xyz".into(), "1".into()]]);
        assert_eq!(t, "a    bb\nxyz  1\n");
    }

    #[test]
    fn catalog_alias_and_kummer() {
        let out = run(&["betti", "--model", "torus", "catalog:kummer"]).unwrap();
        assert!(out.stdout.contains("\n2       22\n"), "{}", out.stdout);
    }

    #[test]
    fn wrong_model_is_validation() {
        let e = run(&["betti", "--model", "point", "catalog:kummer"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
    }

    #[test]
    fn tuple_parsing() {
        assert_eq!(parse_tuple("1, 1,1,1", 2).unwrap(), [1, 1, 1, 1]);
        assert!(matches!(parse_tuple("1,1,1", 2), Err(Error::Validation(_))));
        assert!(matches!(parse_tuple("1,x,1,1", 2), Err(Error::Parse(_))));
        assert!(matches!(parse_tuple("1,1,1,2", 2), Err(Error::Validation(_))));
    }

    #[test]
    fn missing_file_is_parse_error() {
        let e = run(&["sectors", "/nonexistent/file.json"]).unwrap_err();
        assert_eq!(e.exit_code(), 1);
    }
}
