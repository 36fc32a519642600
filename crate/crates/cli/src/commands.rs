//! Subcommand implementations. Each returns a [`Report`] or a classified
//! error; exit codes are derived from the class (2 unreadable/unparseable
//! input, 3 overflow, 1 any other domain failure).

use crate::report::{check_line, Check, Report};
use crate::svg::render_triangulation_svg;
use latticepick::formats::{parse_polygon_str, ParseError};
use latticepick::measures::{boundary_angle_sum, scaling_study, visibility_measure, ScalingReport};
use latticepick::triangulation::{reassembly_order, stats, triangulate};
use latticepick::{extended_gcd, Error, LatticeVector, Polygon};
use serde_json::{json, Value};
use std::fmt::Write as _;
use std::path::Path;

#[derive(Debug)]
pub enum CliError {
    Io(String),
    Parse(ParseError),
    Domain(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(_) | CliError::Parse(_) => 2,
            CliError::Domain(Error::Overflow) => 3,
            CliError::Domain(_) => 1,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Io(msg) => format!("cannot read input: {msg}"),
            CliError::Parse(e) => format!("parse error: {e}"),
            CliError::Domain(e) => format!("invalid input: {e}"),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Domain(e)
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        CliError::Parse(e)
    }
}

fn load_polygon(file: &Path) -> Result<Polygon, CliError> {
    let raw = std::fs::read_to_string(file)
        .map_err(|e| CliError::Io(format!("{}: {e}", file.display())))?;
    let vertices = parse_polygon_str(&raw)?;
    Ok(Polygon::validate(vertices)?)
}

fn vertices_json(p: &Polygon) -> Value {
    Value::Array(p.vertices().iter().map(|v| json!([v.x, v.y])).collect())
}

fn polygon_inputs(file: &Path, p: &Polygon) -> Value {
    json!({
        "file": file.display().to_string(),
        "vertices": vertices_json(p),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AreaMethod {
    Pick,
    Shoelace,
    Both,
}

pub fn cmd_area(file: &Path, method: AreaMethod) -> Result<Report, CliError> {
    let p = load_polygon(file)?;
    let mut results = serde_json::Map::new();
    let mut checks = Vec::new();
    let mut text = format!("command: area\nfile: {}\n", file.display());

    let mut shown_area = None;
    if matches!(method, AreaMethod::Pick | AreaMethod::Both) {
        let t = p.pick_twice_area();
        results.insert("pick_twice_area".into(), json!(t.value()));
        let _ = writeln!(text, "pick twice-area: {}", t.value());
        shown_area = Some(t);
    }
    if matches!(method, AreaMethod::Shoelace | AreaMethod::Both) {
        let t = p.shoelace_twice_area();
        results.insert("shoelace_twice_area".into(), json!(t.value()));
        let _ = writeln!(text, "shoelace twice-area: {}", t.value());
        shown_area = Some(t);
    }
    if method == AreaMethod::Both {
        let pick = p.pick_twice_area();
        let shoelace = p.shoelace_twice_area();
        checks.push(Check::new(
            "pick_equals_shoelace",
            pick == shoelace,
            format!("{} vs {}", pick.value(), shoelace.value()),
        ));
    }
    let area = shown_area.expect("at least one method always runs");
    results.insert("area".into(), json!(area.area_string()));
    let _ = writeln!(text, "area: {}", area.area_string());
    for c in &checks {
        let _ = writeln!(text, "{}", check_line(c));
    }

    Ok(Report {
        command: "area",
        inputs: polygon_inputs(file, &p),
        results: Value::Object(results),
        checks,
        text,
    })
}

pub fn cmd_counts(file: &Path) -> Result<Report, CliError> {
    let p = load_polygon(file)?;
    let counts = p.point_counts();
    let f2 = p.f_doubled();
    let text = format!(
        "command: counts\nfile: {}\nboundary points: {}\ninterior points: {}\ndoubled functional 2F: {}\n",
        file.display(),
        counts.boundary,
        counts.interior,
        f2
    );
    Ok(Report {
        command: "counts",
        inputs: polygon_inputs(file, &p),
        results: json!({
            "boundary": counts.boundary,
            "interior": counts.interior,
            "f_doubled": f2,
        }),
        checks: vec![],
        text,
    })
}

pub fn cmd_triangulate(file: &Path, svg_out: Option<&Path>) -> Result<Report, CliError> {
    let p = load_polygon(file)?;
    let triangles = triangulate(&p);
    let s = stats(&triangles, &p)?;

    let mut text = format!(
        "command: triangulate\nfile: {}\ntriangles: {}\nedges: {}\nvertices: {}\nboundary points: {}\ninterior points: {}\n",
        file.display(),
        s.n_triangles,
        s.n_edges,
        s.n_vertices,
        s.n_boundary,
        s.n_interior
    );
    for t in &triangles {
        let _ = writeln!(
            text,
            "[{},{}] [{},{}] [{},{}]",
            t.a.x, t.a.y, t.b.x, t.b.y, t.c.x, t.c.y
        );
    }

    let mut results = json!({
        "stats": {
            "triangles": s.n_triangles,
            "edges": s.n_edges,
            "vertices": s.n_vertices,
            "boundary": s.n_boundary,
            "interior": s.n_interior,
        },
        "triangles": triangles
            .iter()
            .map(|t| json!([[t.a.x, t.a.y], [t.b.x, t.b.y], [t.c.x, t.c.y]]))
            .collect::<Vec<_>>(),
    });

    if let Some(path) = svg_out {
        let svg = render_triangulation_svg(&p, &triangles);
        std::fs::write(path, svg).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        results["svg"] = json!(path.display().to_string());
        let _ = writeln!(text, "svg written to {}", path.display());
    }

    Ok(Report {
        command: "triangulate",
        inputs: polygon_inputs(file, &p),
        results,
        checks: vec![],
        text,
    })
}

pub fn cmd_bezout(a: i64, b: i64) -> Result<Report, CliError> {
    let cert = extended_gcd(a, b)?;
    let text = format!("command: bezout\ngcd: {}\nidentity: {}\n", cert.g, cert);
    Ok(Report {
        command: "bezout",
        inputs: json!({"a": a, "b": b}),
        results: json!({
            "gcd": cert.g,
            "s": cert.s,
            "t": cert.t,
            "identity": cert.to_string(),
        }),
        checks: vec![],
        text,
    })
}

pub fn cmd_partner(x: i64, y: i64) -> Result<Report, CliError> {
    let u = LatticeVector::new(x, y);
    let w = u.primitive_partner()?;
    let det = u.cross(w);
    let check = Check::new("determinant_is_plus_one", det == 1, format!("det = {det}"));
    let text = format!(
        "command: partner\nvector: {u}\npartner: {w}\ndeterminant: {det}\n{}\n",
        check_line(&check)
    );
    Ok(Report {
        command: "partner",
        inputs: json!({"vector": [x, y]}),
        results: json!({"partner": [w.x, w.y], "det": det as i64}),
        checks: vec![check],
        text,
    })
}

pub fn cmd_farey(n: u32) -> Result<Report, CliError> {
    let seq = latticepick::farey::farey_sequence(n)?;
    // text mode is the bare sequence, one fraction per line
    let mut text = String::new();
    for f in &seq {
        let _ = writeln!(text, "{f}");
    }
    Ok(Report {
        command: "farey",
        inputs: json!({"n": n}),
        results: json!({
            "count": seq.len(),
            "fractions": seq
                .iter()
                .map(|f| json!([f.numerator(), f.denominator()]))
                .collect::<Vec<_>>(),
        }),
        checks: vec![],
        text,
    })
}

fn scaling_rows_json(report: &ScalingReport) -> Value {
    Value::Array(
        report
            .rows
            .iter()
            .map(|r| {
                json!({
                    "k": r.k,
                    "interior": r.interior,
                    "ratio": {"num": r.ratio.numerator() as i64, "den": r.ratio.denominator() as i64},
                    "deficit": {"num": r.deficit.numerator() as i64, "den": r.deficit.denominator() as i64},
                })
            })
            .collect(),
    )
}

pub fn cmd_scale(file: &Path, k_max: u32) -> Result<Report, CliError> {
    let p = load_polygon(file)?;
    let report = scaling_study(&p, k_max)?;
    let mut text = format!(
        "command: scale\nfile: {}\ntwice-area: {}\nboundary points: {}\nk\tinterior\tratio\tdeficit\n",
        file.display(),
        report.twice_area.value(),
        report.boundary
    );
    for r in &report.rows {
        let _ = writeln!(
            text,
            "{}\t{}\t{}\t{}",
            r.k,
            r.interior,
            r.ratio.to_decimal_string(),
            r.deficit.to_decimal_string()
        );
    }
    Ok(Report {
        command: "scale",
        inputs: polygon_inputs(file, &p),
        results: json!({
            "twice_area": report.twice_area.value(),
            "boundary": report.boundary,
            "rows": scaling_rows_json(&report),
        }),
        checks: vec![],
        text,
    })
}

pub fn cmd_check(file: &Path) -> Result<Report, CliError> {
    let p = load_polygon(file)?;
    let mut checks = Vec::new();

    let pick = p.pick_twice_area();
    let shoelace = p.shoelace_twice_area();
    checks.push(Check::new(
        "pick_equals_shoelace",
        pick == shoelace,
        format!("{} vs {}", pick.value(), shoelace.value()),
    ));

    let visibility = visibility_measure(&p);
    let exact_area = pick.value() as f64 / 2.0;
    checks.push(Check::new(
        "visibility_total",
        (visibility.total - exact_area).abs() <= 1e-9,
        format!("sum {} vs area {exact_area}", visibility.total),
    ));

    let counts = p.point_counts();
    let boundary_sum = boundary_angle_sum(&p);
    let boundary_expected = counts.boundary as f64 / 2.0 - 1.0;
    checks.push(Check::new(
        "boundary_angle_sum",
        (boundary_sum - boundary_expected).abs() <= 1e-9,
        format!("sum {boundary_sum} vs {boundary_expected}"),
    ));

    let triangles = triangulate(&p);
    match stats(&triangles, &p) {
        Ok(s) => {
            checks.push(Check::new(
                "triangulation_stats",
                true,
                format!(
                    "triangles {} edges {} vertices {}",
                    s.n_triangles, s.n_edges, s.n_vertices
                ),
            ));
        }
        Err(e) => checks.push(Check::new("triangulation_stats", false, e.to_string())),
    }

    match reassembly_order(&triangles) {
        Ok(steps) => checks.push(Check::new(
            "reassembly_stepwise",
            steps.len() == triangles.len(),
            format!("{} steps, area identity at each", steps.len()),
        )),
        Err(e) => checks.push(Check::new("reassembly_stepwise", false, e.to_string())),
    }

    match scaling_study(&p, 5) {
        Ok(report) => {
            let ok = report.rows.iter().all(|r| {
                let k = r.k as i128;
                2 * r.interior as i128
                    == k * k * report.twice_area.value() as i128 - k * report.boundary as i128 + 2
            });
            checks.push(Check::new(
                "scaling_identity",
                ok,
                "interior(kP) = k^2*A - k*N^b/2 + 1 for k = 1..=5".to_string(),
            ));
        }
        Err(e) => checks.push(Check::new("scaling_identity", false, e.to_string())),
    }

    let mut text = format!("command: check\nfile: {}\n", file.display());
    for c in &checks {
        let _ = writeln!(text, "{}", check_line(c));
    }
    let all = checks.iter().all(|c| c.pass);
    let _ = writeln!(
        text,
        "result: {}",
        if all { "all checks pass" } else { "FAILED" }
    );

    Ok(Report {
        command: "check",
        inputs: polygon_inputs(file, &p),
        results: json!({"passed": all}),
        checks,
        text,
    })
}
