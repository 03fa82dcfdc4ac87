//! Command implementations behind the `sagbilab` binary. Each returns the
//! text to print; the binary only parses arguments and maps errors to exit
//! codes.

use std::path::Path;

use serde_json::json;

use super::io::{parse_monoid_spec, parse_point, parse_points, read_matrix, read_polynomial_list};
use super::svg::Diagram;
use super::{example_monoid, reproduce, ExampleId};
use crate::error::{Error, Result};
use crate::groebner::{buchberger, Ideal, Limits};
use crate::monoid::{
    cone_of, construct_module_monoid, irreducibles, is_finitely_generated, AffineMonoid, Cone2D,
};
use crate::monomial::{Monomial, MonomialOrder};
use crate::parse::{parse_poly, PolyJson};
use crate::subalgebra::{sagbi_check, sagbi_construct, subduct, GeneratorSet, SagbiCheck};
use crate::toric::toric_ideal;

/// Exit codes of the binary.
pub mod exit {
    pub const OK: i32 = 0;
    pub const INPUT: i32 = 1;
    pub const RESOURCE: i32 = 2;
    pub const MISMATCH: i32 = 3;
}

pub fn exit_code(e: &Error) -> i32 {
    if e.is_resource_limit() {
        exit::RESOURCE
    } else {
        exit::INPUT
    }
}

/// Printed output and the exit code to report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub code: i32,
}

impl Output {
    fn ok(text: impl Into<String>) -> Self {
        Output {
            text: text.into(),
            code: exit::OK,
        }
    }
}

fn pretty(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

fn load_gens(path: &Path, order: Option<&str>) -> Result<GeneratorSet> {
    let (ring, polys) = read_polynomial_list(path)?;
    let order: MonomialOrder = order.unwrap_or("grevlex").parse()?;
    GeneratorSet::new(&ring, order, polys)
}

fn strings<T: ToString>(xs: &[T]) -> Vec<String> {
    xs.iter().map(T::to_string).collect()
}

pub fn sagbi_check_cmd(
    gens: &Path,
    order: Option<&str>,
    as_json: bool,
    limits: Limits,
) -> Result<Output> {
    let set = load_gens(gens, order)?;
    let result = sagbi_check(&set, limits)?;
    if as_json {
        let v = match &result {
            SagbiCheck::IsSagbi(cert) => json!({
                "order": set.order().to_string(),
                "is_sagbi": true,
                "relations": cert.iter().map(|c| c.relation.to_string()).collect::<Vec<_>>(),
            }),
            SagbiCheck::NotSagbi { witness, remainder } => json!({
                "order": set.order().to_string(),
                "is_sagbi": false,
                "witness": witness.to_string(),
                "remainder": remainder.to_string(),
            }),
        };
        return Ok(Output::ok(pretty(&v)));
    }
    Ok(Output::ok(match result {
        SagbiCheck::IsSagbi(cert) => {
            format!("IsSagbi ({} relations subduce to constants)\n", cert.len())
        }
        SagbiCheck::NotSagbi { witness, remainder } => {
            format!("NotSagbi\nwitness: {witness}\nremainder: {remainder}\n")
        }
    }))
}

pub fn sagbi_compute_cmd(
    gens: &Path,
    max_degree: u64,
    order: Option<&str>,
    as_json: bool,
    limits: Limits,
) -> Result<Output> {
    let set = load_gens(gens, order)?;
    let report = sagbi_construct(&set, max_degree, limits)?;
    let initials = report.initials();
    if as_json {
        let v = json!({
            "order": set.order().to_string(),
            "max_degree": max_degree,
            "status": report.status,
            "basis": strings(report.basis.gens()),
            "initials": initials,
            "rounds": report.rounds,
            "max_degree_reached": report.max_degree_reached,
            "pending": report.pending.as_ref().map(|p| p.to_string()),
        });
        return Ok(Output::ok(pretty(&v)));
    }
    let mut s = format!("status: {:?}\norder: {}\n", report.status, set.order());
    for (g, e) in report.basis.gens().iter().zip(&initials) {
        s.push_str(&format!("{e}  {g}\n"));
    }
    if let Some(p) = &report.pending {
        s.push_str(&format!("pending beyond bound: {p}\n"));
    }
    Ok(Output::ok(s))
}

pub fn subduce_cmd(gens: &Path, poly: &str, order: Option<&str>, as_json: bool) -> Result<Output> {
    let set = load_gens(gens, order)?;
    let f = parse_poly(poly, set.ring())?;
    let res = subduct(&f, &set)?;
    if as_json {
        let v = json!({
            "q": PolyJson::from(&res.q),
            "r": res.r.to_string(),
            "c": crate::parse::fmt_rational(&res.c),
            "q_terms": res.q_expr.iter().map(|(c, ks)| json!({"c": crate::parse::fmt_rational(c), "exponents": ks})).collect::<Vec<_>>(),
        });
        return Ok(Output::ok(pretty(&v)));
    }
    Ok(Output::ok(format!(
        "q = {}\nr = {}\nc = {}\n",
        res.q,
        res.r,
        crate::parse::fmt_rational(&res.c)
    )))
}

pub fn toric_cmd(matrix: &Path, as_json: bool, limits: Limits) -> Result<Output> {
    let a = read_matrix(matrix)?;
    let ideal = toric_ideal(&a, limits)?;
    if as_json {
        let v = json!({
            "columns": a.columns(),
            "generators": strings(ideal.generators()),
        });
        return Ok(Output::ok(pretty(&v)));
    }
    Ok(Output::ok(format!("{ideal}")))
}

pub fn groebner_cmd(
    ideal: &Path,
    order: Option<&str>,
    as_json: bool,
    limits: Limits,
) -> Result<Output> {
    let (ring, polys) = read_polynomial_list(ideal)?;
    let order: MonomialOrder = order.unwrap_or("grevlex").parse()?;
    let gb = buchberger(&Ideal::new(&ring, polys)?, &order, limits)?;
    if as_json {
        let v = json!({ "order": order.to_string(), "basis": strings(gb.elements()) });
        return Ok(Output::ok(pretty(&v)));
    }
    Ok(Output::ok(
        gb.elements()
            .iter()
            .map(|g| format!("{g}\n"))
            .collect::<String>(),
    ))
}

pub fn irreducibles_cmd(spec: &str, bound: u32, as_json: bool) -> Result<Output> {
    let m = parse_monoid_spec(spec)?;
    let irr = irreducibles(&m, bound)?;
    if as_json {
        return Ok(Output::ok(pretty(
            &json!({ "box": bound, "irreducibles": irr }),
        )));
    }
    let mut s = format!("irreducibles in [0,{bound}]^{}:\n", m.dim());
    for p in irr {
        s.push_str(&format!("{p}\n"));
    }
    Ok(Output::ok(s))
}

/// The cone of a monoid: the span of its finite generators, family bases
/// and periods, and the quadrant for the squares stream. Families and
/// streams make this the closure of the real cone.
fn closure_points(m: &AffineMonoid) -> Vec<Monomial> {
    let mut pts: Vec<Monomial> = m.finite_gens().to_vec();
    for f in m.families() {
        pts.push(f.base.clone());
        pts.push(f.period.clone());
    }
    if m.stream().is_some() {
        pts.push(Monomial::new(vec![1, 0]));
        pts.push(Monomial::new(vec![0, 1]));
    }
    pts
}

pub fn cone_cmd(spec: &str, as_json: bool) -> Result<Output> {
    let m = parse_monoid_spec(spec)?;
    let closed = m.families().is_empty() && m.stream().is_none();
    let cone = cone_of(&closure_points(&m))?;
    if as_json {
        return Ok(Output::ok(pretty(
            &json!({ "cone": cone, "closure_only": !closed }),
        )));
    }
    let mut s = match &cone {
        Cone2D::Zero => "cone: {0}\n".to_string(),
        Cone2D::Ray(v) => format!("cone: ray {v}\n"),
        Cone2D::Proper { v1, v2, w1, w2 } => format!(
            "cone: rays {v1} {v2}\nfacet normals: ({},{}) ({},{})\n",
            w1[0], w1[1], w2[0], w2[1]
        ),
    };
    if !closed {
        s.push_str("(closure; the monoid has infinitely many generators)\n");
    }
    Ok(Output::ok(s))
}

pub fn construct_cmd(
    v1: &str,
    v2: &str,
    us: &str,
    bound: u32,
    plot: Option<&Path>,
    as_json: bool,
) -> Result<Output> {
    let (v1, v2, us) = (parse_point(v1)?, parse_point(v2)?, parse_points(us)?);
    let m = construct_module_monoid(&v1, &v2, &us)?;
    let irr = irreducibles(&m, bound)?;
    let fg = is_finitely_generated(&m, bound);
    if let Some(path) = plot {
        write_plot(&m, bound, path, Some("module monoid".into()))?;
    }
    if as_json {
        let v = json!({
            "box": bound,
            "generators_in_box": m.generators_in_box(bound),
            "irreducibles": irr,
            "finitely_generated": fg,
        });
        return Ok(Output::ok(pretty(&v)));
    }
    let mut s = format!("finitely generated: {fg:?}\nirreducibles in [0,{bound}]^2:\n");
    for p in irr {
        s.push_str(&format!("{p}\n"));
    }
    Ok(Output::ok(s))
}

fn write_plot(m: &AffineMonoid, bound: u32, path: &Path, title: Option<String>) -> Result<()> {
    if m.dim() != 2 {
        return Err(Error::Dimension {
            expected: 2,
            got: m.dim(),
        });
    }
    let diagram = Diagram {
        bound,
        members: m.elements_in_box(bound),
        irreducibles: irreducibles(m, bound.max(1))?.into_iter().collect(),
        cone: cone_of(&closure_points(m)).ok(),
        title,
    };
    std::fs::write(path, diagram.render())
        .map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

pub fn plot_cmd(
    example: Option<&str>,
    spec: Option<&str>,
    bound: u32,
    out: &Path,
    limits: Limits,
) -> Result<Output> {
    let (m, title) = match (example, spec) {
        (Some(e), None) => {
            let id: ExampleId = e.parse()?;
            (example_monoid(&id, limits)?, id.to_string())
        }
        (None, Some(s)) => (parse_monoid_spec(s)?, s.to_string()),
        _ => {
            return Err(Error::precondition(
                "give exactly one of --example and --gens",
            ))
        }
    };
    write_plot(&m, bound, out, Some(title))?;
    Ok(Output::ok(format!("wrote {}\n", out.display())))
}

pub fn reproduce_cmd(
    example: Option<&str>,
    all: bool,
    max_degree: Option<u64>,
    as_json: bool,
    timing: bool,
    limits: Limits,
) -> Result<Output> {
    let ids = match (example, all) {
        (Some(e), false) => vec![e.parse::<ExampleId>()?],
        (None, true) => ExampleId::all(),
        _ => {
            return Err(Error::precondition(
                "give exactly one of --example and --all",
            ))
        }
    };
    let mut text = String::new();
    let mut code = exit::OK;
    let mut reports = Vec::new();
    for id in &ids {
        let r = reproduce(id, max_degree, limits)?;
        if !r.is_match() {
            code = exit::MISMATCH;
        }
        if as_json {
            reports.push(r.to_json(timing));
        } else {
            text.push_str(&r.to_string());
            if timing {
                text.push_str(&format!("  seconds: {:.3}\n", r.seconds));
            }
        }
    }
    if as_json {
        text = if reports.len() == 1 {
            reports.pop().unwrap()
        } else {
            format!("[\n{}\n]", reports.join(",\n"))
        };
        text.push('\n');
    }
    Ok(Output { text, code })
}

pub fn list_cmd() -> Output {
    Output::ok(
        ExampleId::all()
            .iter()
            .map(|id| format!("{id}\n"))
            .collect::<String>(),
    )
}
