use std::fmt::{self, Write as _};
use std::fs;
use std::path::{Path, PathBuf};

use gpindex_core::automorphisms::{enumerate_automorphisms, vertex_orbits};
use gpindex_core::indices::{gp_cut_method, gp_direct, per_orbit_wiener, wiener, CoarsenessCheck};
use gpindex_core::quotient::quotient_graph;
use gpindex_core::theta::theta_star_partition;
use gpindex_core::tubulene::{closed_form_gp, generate, label_comments, theoretical_orbits};
use gpindex_core::{EdgePartition, Error, ExactRational, Graph, TubuleneSpec};
use rayon::prelude::*;

use crate::{Method, TubuleneMethod};

const EXIT_PARSE: u8 = 1;
const EXIT_VALIDATION: u8 = 2;
const EXIT_MISMATCH: u8 = 3;

/// Text for stdout, the exit code, and at most one diagnostic for stderr.
pub struct Report {
    pub text: String,
    pub code: u8,
    pub diagnostic: Option<String>,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, code: 0, diagnostic: None }
    }

    fn checked(text: String, mismatch: Option<String>) -> Self {
        let code = if mismatch.is_some() { EXIT_MISMATCH } else { 0 };
        Report { text, code, diagnostic: mismatch }
    }
}

#[derive(Debug)]
pub enum Failure {
    Io { path: PathBuf, source: std::io::Error },
    Core { context: Option<PathBuf>, error: Error },
    Usage(String),
}

impl Failure {
    pub fn code(&self) -> u8 {
        match self {
            Failure::Io { .. } | Failure::Core { error: Error::Parse { .. }, .. } => EXIT_PARSE,
            Failure::Core { .. } | Failure::Usage(_) => EXIT_VALIDATION,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Io { path, source } => write!(f, "{}: {source}", path.display()),
            Failure::Core { context: Some(path), error } => write!(f, "{}: {error}", path.display()),
            Failure::Core { context: None, error } => write!(f, "{error}"),
            Failure::Usage(message) => f.write_str(message),
        }
    }
}

impl From<Error> for Failure {
    fn from(error: Error) -> Self {
        Failure::Core { context: None, error }
    }
}

trait Context<T> {
    fn at(self, path: &Path) -> Result<T, Failure>;
}

impl<T> Context<T> for gpindex_core::Result<T> {
    fn at(self, path: &Path) -> Result<T, Failure> {
        self.map_err(|error| Failure::Core { context: Some(path.to_path_buf()), error })
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|source| Failure::Io { path: path.to_path_buf(), source })
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|source| Failure::Io { path: path.to_path_buf(), source })
}

fn read_connected_graph(path: &Path) -> Result<Graph, Failure> {
    let g = Graph::parse_edge_list(&read(path)?).at(path)?;
    g.require_connected().at(path)?;
    Ok(g)
}

fn gp_lines(out: &mut String, value: &ExactRational) {
    writeln!(out, "GP={value}").unwrap();
    writeln!(out, "GP≈{}", value.to_decimal(6)).unwrap();
}

pub fn compute(
    path: &Path,
    method: Method,
    partition_path: Option<&Path>,
    verbose: bool,
    node_limit: u64,
) -> Result<Report, Failure> {
    if method == Method::Direct && partition_path.is_some() {
        return Err(Failure::Usage("--partition needs --method cut or --method both".into()));
    }
    let g = read_connected_graph(path)?;
    let partition = match (method, partition_path) {
        (Method::Direct, _) => None,
        (_, Some(p)) => Some(EdgePartition::parse(&read(p)?, g.edge_count()).at(p)?),
        (_, None) => Some(theta_star_partition(&g)?),
    };
    let autos = enumerate_automorphisms(&g, node_limit).at(path)?;
    let orbits = vertex_orbits(&g, &autos);
    let per_orbit = per_orbit_wiener(&g, &orbits)?;
    let direct = match method {
        Method::Cut => None,
        _ => Some(gp_direct(&g, &orbits)?),
    };
    let cut = match &partition {
        Some(p) => {
            let context = partition_path.unwrap_or(path);
            Some(gp_cut_method(&g, &orbits, p, CoarsenessCheck::Verify).at(context)?)
        }
        None => None,
    };

    let mut out = String::new();
    writeln!(
        out,
        "vertices={} edges={} orbits={} aut_order={}",
        g.vertex_count(),
        g.edge_count(),
        orbits.len(),
        autos.len()
    )
    .unwrap();
    writeln!(out, "W={}", wiener(&g)?).unwrap();
    writeln!(out, "Wprime={}", per_orbit.iter().sum::<u128>()).unwrap();
    if verbose {
        for (i, (orbit, w)) in orbits.orbits().iter().zip(&per_orbit).enumerate() {
            writeln!(out, "orbit i={i} size={} W={w}", orbit.len()).unwrap();
        }
        if let Some(c) = &cut {
            for (i, row) in c.terms.iter().enumerate() {
                for (j, w) in row.iter().enumerate() {
                    writeln!(out, "term i={i} j={j} W={w}").unwrap();
                }
            }
        }
    }
    let mut mismatch = None;
    match (&direct, &cut) {
        (Some(d), Some(c)) => {
            writeln!(out, "GP_direct={d}").unwrap();
            writeln!(out, "GP_cut={}", c.value).unwrap();
            if *d != c.value {
                mismatch = Some(format!("direct {d} and cut-method {} values differ", c.value));
            }
            gp_lines(&mut out, d);
        }
        (Some(d), None) => gp_lines(&mut out, d),
        (None, Some(c)) => gp_lines(&mut out, &c.value),
        (None, None) => unreachable!("a method always runs"),
    }
    Ok(Report::checked(out, mismatch))
}

pub fn tubulene(n: usize, h: usize, method: TubuleneMethod, emit_graph: Option<&Path>) -> Result<Report, Failure> {
    let spec = TubuleneSpec::new(n, h)?;
    let g = generate(spec);
    if let Some(path) = emit_graph {
        write(path, &g.to_edge_list(Some(&label_comments(spec))))?;
    }
    let runs = |m: TubuleneMethod| method == m || method == TubuleneMethod::All;
    let orbits = theoretical_orbits(spec);

    let mut out = String::new();
    writeln!(out, "graph={spec} vertices={} edges={}", g.vertex_count(), g.edge_count()).unwrap();
    let direct = runs(TubuleneMethod::Direct).then(|| gp_direct(&g, &orbits)).transpose()?;
    let cut = if runs(TubuleneMethod::Cut) {
        let theta = theta_star_partition(&g)?;
        Some(gp_cut_method(&g, &orbits, &theta, CoarsenessCheck::Skip)?.value)
    } else {
        None
    };
    let closed = runs(TubuleneMethod::Closed).then(|| closed_form_gp(spec));
    if let Some(d) = &direct {
        writeln!(out, "GP_direct={d}").unwrap();
    }
    if let Some(c) = &cut {
        writeln!(out, "GP_cut={c}").unwrap();
    }
    let regime = match closed.as_ref().and_then(|c| c.regime) {
        Some(r) => r.id(),
        None => "unsupported",
    };
    if let Some(c) = &closed {
        match &c.value {
            Some(v) => writeln!(out, "GP_closed={v} regime={regime}").unwrap(),
            None => writeln!(out, "GP_closed=unsupported").unwrap(),
        }
    }

    let closed_value = closed.as_ref().and_then(|c| c.value.clone());
    let mut mismatch = None;
    if let Some(d) = &direct {
        if cut.as_ref().is_some_and(|c| c != d) || closed_value.as_ref().is_some_and(|c| c != d) {
            mismatch = Some(format!("routes disagree for {spec}"));
        }
    }
    if method == TubuleneMethod::All {
        writeln!(out, "agree={}", mismatch.is_none()).unwrap();
    }
    match direct.or(cut).or(closed_value) {
        Some(value) if method == TubuleneMethod::Closed || method == TubuleneMethod::All => {
            writeln!(out, "GP={value} regime={regime}").unwrap();
            writeln!(out, "GP≈{}", value.to_decimal(6)).unwrap();
        }
        Some(value) => gp_lines(&mut out, &value),
        None => writeln!(out, "GP=unsupported").unwrap(),
    }
    Ok(Report::checked(out, mismatch))
}

pub fn theta(path: &Path, quotients: bool) -> Result<Report, Failure> {
    let g = read_connected_graph(path)?;
    let partition = theta_star_partition(&g)?;
    let mut out = format!("# classes={}\n", partition.len());
    out.push_str(&partition.to_text());
    if quotients {
        for (j, block) in partition.blocks().iter().enumerate() {
            writeln!(out, "# quotient j={j}").unwrap();
            for line in quotient_graph(&g, block)?.to_text().lines() {
                let line = line.strip_prefix("# ").unwrap_or(line);
                writeln!(out, "#   {line}").unwrap();
            }
        }
    }
    Ok(Report::ok(out))
}

pub fn orbits(path: &Path, node_limit: u64) -> Result<Report, Failure> {
    let g = read_connected_graph(path)?;
    let autos = enumerate_automorphisms(&g, node_limit).at(path)?;
    let mut out = String::new();
    for orbit in vertex_orbits(&g, &autos).orbits() {
        let list: Vec<String> = orbit.iter().map(ToString::to_string).collect();
        writeln!(out, "{}", list.join(" ")).unwrap();
    }
    writeln!(out, "|Aut|={}", autos.len()).unwrap();
    Ok(Report::ok(out))
}

struct SweepRow {
    spec: TubuleneSpec,
    direct: ExactRational,
    cut: ExactRational,
    closed: Option<ExactRational>,
    regime: &'static str,
    aut_order: Option<usize>,
    agree: bool,
}

fn sweep_row(spec: TubuleneSpec, aut_max_vertices: usize, node_limit: u64) -> Result<SweepRow, Failure> {
    let g = generate(spec);
    let orbits = theoretical_orbits(spec);
    let direct = gp_direct(&g, &orbits)?;
    let cut = gp_cut_method(&g, &orbits, &theta_star_partition(&g)?, CoarsenessCheck::Skip)?.value;
    let closed = closed_form_gp(spec);
    let mut orbits_agree = true;
    let mut aut_order = None;
    if spec.vertex_count() <= aut_max_vertices {
        match enumerate_automorphisms(&g, node_limit) {
            Ok(autos) => {
                orbits_agree = vertex_orbits(&g, &autos) == orbits;
                aut_order = Some(autos.len());
            }
            Err(Error::NodeLimitExceeded { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    let agree = cut == direct && closed.value.as_ref().is_none_or(|c| *c == direct) && orbits_agree;
    Ok(SweepRow {
        spec,
        direct,
        cut,
        regime: closed.regime.map_or("unsupported", |r| r.id()),
        closed: closed.value,
        aut_order,
        agree,
    })
}

pub fn sweep(n_max: usize, h_max: usize, output: &Path, aut_max_vertices: usize, node_limit: u64) -> Result<Report, Failure> {
    if n_max < 1 || h_max < 2 {
        return Err(Failure::Usage(format!("sweep bounds need N_MAX >= 1 and H_MAX >= 2, got {n_max} {h_max}")));
    }
    let specs: Vec<TubuleneSpec> = (1..=n_max)
        .flat_map(|n| (2..=h_max).map(move |h| TubuleneSpec::new(n, h)))
        .collect::<gpindex_core::Result<_>>()?;
    let rows: Vec<SweepRow> = specs
        .into_par_iter()
        .map(|spec| sweep_row(spec, aut_max_vertices, node_limit))
        .collect::<Result<_, _>>()?;

    let mut csv = String::from("n,h,gp_direct,gp_cut,gp_closed,regime,aut_order,agree\n");
    for r in &rows {
        writeln!(
            csv,
            "{},{},{},{},{},\"{}\",{},{}",
            r.spec.n(),
            r.spec.h(),
            r.direct,
            r.cut,
            r.closed.as_ref().map(ToString::to_string).unwrap_or_default(),
            r.regime,
            r.aut_order.map(|a| a.to_string()).unwrap_or_default(),
            r.agree
        )
        .unwrap();
    }
    write(output, &csv)?;

    let disagreeing: Vec<String> = rows.iter().filter(|r| !r.agree).map(|r| r.spec.to_string()).collect();
    let supported = rows.iter().filter(|r| r.closed.is_some()).count();
    let out = format!(
        "rows={} agree={} closed_supported={supported} output={}\n",
        rows.len(),
        rows.len() - disagreeing.len(),
        output.display()
    );
    let mismatch = (!disagreeing.is_empty()).then(|| format!("routes disagree for {}", disagreeing.join(" ")));
    Ok(Report::checked(out, mismatch))
}
