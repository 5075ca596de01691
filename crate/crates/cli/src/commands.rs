use std::path::Path;

use serde::Serialize;
use serde_json::Value;

use corank2_core::bigraded::{
    assemble_frame, d_kw, frame_has_c, jacobi_system, solve_family, FamilyJson, SweepRow, Unknowns,
};
use corank2_core::exact::{is_zero_vec, one, rat_to_string};
use corank2_core::invariants::{invariant_report, FrameAlgebra};
use corank2_core::liealg::{
    builtin_model, weak_derived_flag, AlgebraJson, GradedLieAlgebra, Subspace,
};
use corank2_core::pencil::{g1_check, kronecker_index, symbol_pencil, xp_polynomial, SkewPencil};
use corank2_core::sl2rep::{decompose, exterior_power, irreducible, tensor, DecompositionJson};
use corank2_core::Error;

pub struct CliError {
    pub code: u8,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        Self {
            code: 2,
            message: message.into(),
        }
    }

    fn failure(message: impl Into<String>) -> Self {
        Self {
            code: 1,
            message: message.into(),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Input(_) | Error::Json(_) | Error::Multiplicity { .. } => 2,
            Error::Structural(_) | Error::Jacobi(..) => 1,
        };
        Self {
            code,
            message: e.to_string(),
        }
    }
}

/// A rendered report plus whether it records a verification failure.
pub struct Output {
    compact: String,
    indented: String,
    table: Option<String>,
    pub failed: bool,
}

impl Output {
    fn new<T: Serialize>(value: &T) -> Self {
        Self {
            compact: serde_json::to_string(value).expect("serializable report"),
            indented: serde_json::to_string_pretty(value).expect("serializable report"),
            table: None,
            failed: false,
        }
    }

    fn with_table(mut self, table: String) -> Self {
        self.table = Some(table);
        self
    }

    fn failed_if(mut self, failed: bool) -> Self {
        self.failed = failed;
        self
    }

    pub fn render(&self, pretty: bool) -> String {
        match (pretty, &self.table) {
            (false, _) => self.compact.clone(),
            (true, Some(t)) => t.clone(),
            (true, None) => self.indented.clone(),
        }
    }
}

fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.len());
        }
    }
    let line = |cells: Vec<String>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:>w$}"))
            .collect::<Vec<_>>()
            .join("  ")
    };
    let mut out = vec![line(header.iter().map(|s| s.to_string()).collect())];
    out.extend(rows.iter().map(|r| line(r.clone())));
    out.join("\n")
}

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path)
        .map_err(|e| CliError::usage(format!("cannot read {}: {e}", path.display())))
}

#[derive(Serialize)]
struct ClassifyRow {
    w: usize,
    d: i64,
    oracle_dim: usize,
    family_dim: i64,
    frame_dim: Option<usize>,
}

#[derive(Serialize)]
struct ClassifyReport {
    k: usize,
    nonempty: Vec<usize>,
    families: Vec<ClassifyRow>,
}

pub fn classify(k: usize) -> Result<Output, CliError> {
    let mut families = Vec::new();
    for w in (1..2 * k).step_by(2) {
        let f = solve_family(k, w)?;
        families.push(ClassifyRow {
            w,
            d: d_kw(k as i64, w as i64),
            oracle_dim: f.hom_dim(),
            family_dim: f.family_dim,
            frame_dim: (!f.is_empty()).then(|| 2 * k + 6 + usize::from(frame_has_c(k, w))),
        });
    }
    let report = ClassifyReport {
        k,
        nonempty: families
            .iter()
            .filter(|r| r.family_dim >= 0)
            .map(|r| r.w)
            .collect(),
        families,
    };
    let rows: Vec<Vec<String>> = report
        .families
        .iter()
        .map(|r| {
            vec![
                r.w.to_string(),
                r.d.to_string(),
                r.oracle_dim.to_string(),
                if r.family_dim < 0 {
                    "empty".into()
                } else {
                    r.family_dim.to_string()
                },
                r.frame_dim.map_or("-".into(), |d| d.to_string()),
            ]
        })
        .collect();
    let t = format!(
        "k = {k}\n{}",
        table(&["w", "d", "oracle", "family", "frame"], &rows)
    );
    Ok(Output::new(&report).with_table(t))
}

pub fn family(k: usize, w: usize) -> Result<Output, CliError> {
    let f = solve_family(k, w)?;
    Ok(Output::new(&FamilyJson::from(&f)))
}

#[derive(Serialize)]
struct AlgebraReport {
    kind: &'static str,
    dim: usize,
    jacobi_residual: String,
    witness: Option<[String; 3]>,
    bidegrees_additive: bool,
    growth: Vec<usize>,
    verified: bool,
}

fn algebra_report(g: &GradedLieAlgebra) -> Result<Output, CliError> {
    let jac = g.jacobi_residual();
    let witness = jac.witness.map(|(a, b, c)| {
        [
            g.label(a).to_string(),
            g.label(b).to_string(),
            g.label(c).to_string(),
        ]
    });
    let low = g.indices_with_degree2(-1);
    let growth = if low.is_empty() {
        Vec::new()
    } else {
        weak_derived_flag(g, &Subspace::coordinate(g.dim(), &low))?
    };
    let additive = g.bidegrees_additive();
    let verified = jac.holds() && additive;
    let report = AlgebraReport {
        kind: "algebra",
        dim: g.dim(),
        jacobi_residual: rat_to_string(&jac.residual),
        witness,
        bidegrees_additive: additive,
        growth,
        verified,
    };
    Ok(Output::new(&report).failed_if(!verified))
}

#[derive(Serialize)]
struct FamilyReport {
    kind: &'static str,
    k: usize,
    w: usize,
    family_dim: i64,
    recomputed_family_dim: i64,
    point_matches: bool,
    frame_dim: Option<usize>,
    frame_jacobi: Option<bool>,
    verified: bool,
}

fn family_report(j: &FamilyJson) -> Result<Output, CliError> {
    let given = j.cmatrix()?;
    let fresh = solve_family(j.k, j.w)?;
    let point_matches = match (&given, &fresh.normalized_c) {
        (None, None) => true,
        (Some(c), Some(_)) => {
            let u = Unknowns::new(j.k, j.w);
            let residual = jacobi_system(j.k, j.w)?.mul_vec(&u.from_cmatrix(c));
            is_zero_vec(&residual) && c.get(0, j.w) == one()
        }
        _ => false,
    };
    let (frame_dim, frame_jacobi) = match &given {
        None => (None, None),
        Some(c) => match assemble_frame(c) {
            Ok(g) => (Some(g.dim()), Some(true)),
            Err(Error::Jacobi(..)) => (None, Some(false)),
            Err(e) => return Err(e.into()),
        },
    };
    let verified = j.family_dim == fresh.family_dim && point_matches && frame_jacobi != Some(false);
    let report = FamilyReport {
        kind: "family",
        k: j.k,
        w: j.w,
        family_dim: j.family_dim,
        recomputed_family_dim: fresh.family_dim,
        point_matches,
        frame_dim,
        frame_jacobi,
        verified,
    };
    Ok(Output::new(&report).failed_if(!verified))
}

pub fn verify(input: Option<&Path>, builtin: Option<&str>) -> Result<Output, CliError> {
    match (input, builtin) {
        (None, Some(name)) => algebra_report(&builtin_model(name)?),
        (Some(path), None) => {
            let text = read(path)?;
            let value: Value = serde_json::from_str(&text).map_err(Error::from)?;
            if value.get("basis").is_some() {
                let a: AlgebraJson = serde_json::from_value(value).map_err(Error::from)?;
                algebra_report(&a.to_algebra()?)
            } else if value.get("hom_basis").is_some() {
                let f: FamilyJson = serde_json::from_value(value).map_err(Error::from)?;
                family_report(&f)
            } else {
                Err(CliError::usage(
                    "input is neither an algebra nor a family document",
                ))
            }
        }
        _ => Err(CliError::usage(
            "verify needs exactly one of --in or --builtin",
        )),
    }
}

#[derive(Serialize)]
struct PencilReport {
    k: usize,
    kronecker_index: usize,
    tilde_d_dim: usize,
    g1_holds: bool,
    real_kernel_everywhere_1dim: bool,
    degenerate: bool,
    xp_coefficients: Vec<Vec<String>>,
}

pub fn pencil(input: Option<&Path>, k: Option<usize>) -> Result<Output, CliError> {
    let p = match (input, k) {
        (Some(path), None) => SkewPencil::from_json(&read(path)?)?,
        (None, Some(k)) => symbol_pencil(k)?,
        _ => return Err(CliError::usage("pencil needs exactly one of --in or --k")),
    };
    let g1 = g1_check(&p)?;
    let xp = xp_polynomial(&p);
    let report = PencilReport {
        k: p.k(),
        kronecker_index: kronecker_index(&p)?,
        tilde_d_dim: g1.tilde_d_dim,
        g1_holds: g1.g1_holds,
        real_kernel_everywhere_1dim: g1.real_kernel_everywhere_1dim,
        degenerate: g1.degenerate,
        xp_coefficients: xp
            .coeffs
            .iter()
            .map(|b| b.iter().map(rat_to_string).collect())
            .collect(),
    };
    Ok(Output::new(&report))
}

pub fn sl2(k: usize, w: Option<usize>) -> Result<Output, CliError> {
    let vk = irreducible(k);
    let modules = match w {
        Some(l) => vec![(format!("tensor(V_{k},V_{l})"), tensor(&vk, &irreducible(l)))],
        None => vec![
            (format!("wedge2(V_{k})"), exterior_power(&vk, 2)),
            (format!("wedge3(V_{k})"), exterior_power(&vk, 3)),
        ],
    };
    let mut reports = Vec::new();
    let mut failed = false;
    for (name, m) in &modules {
        failed |= !m.relations_hold();
        reports.push(DecompositionJson::new(name.clone(), &decompose(m)?));
    }
    let t = reports
        .iter()
        .map(|r| {
            let parts: Vec<String> = r
                .parts
                .iter()
                .map(|p| {
                    if p.multiplicity == 1 {
                        format!("V_{}", p.highest_weight)
                    } else {
                        format!("{}·V_{}", p.multiplicity, p.highest_weight)
                    }
                })
                .collect();
            format!("{} = {}", r.source, parts.join(" + "))
        })
        .collect::<Vec<_>>()
        .join("\n");
    Ok(Output::new(&reports).with_table(t).failed_if(failed))
}

pub fn invariants(
    k: Option<usize>,
    w: Option<usize>,
    input: Option<&Path>,
) -> Result<Output, CliError> {
    let c = match (k, w, input) {
        (Some(k), Some(w), None) => solve_family(k, w)?.normalized_c,
        (None, None, Some(path)) => {
            let f: FamilyJson = serde_json::from_str(&read(path)?).map_err(Error::from)?;
            f.cmatrix()?
        }
        _ => return Err(CliError::usage("invariants needs --k and --w, or --in")),
    };
    let c = c.ok_or_else(|| CliError::failure("the family is empty; there is no frame algebra"))?;
    let frame = FrameAlgebra::new(assemble_frame(&c)?)?;
    Ok(Output::new(&invariant_report(&frame)?))
}

pub fn builtin(name: &str) -> Result<Output, CliError> {
    let g = builtin_model(name)?;
    Ok(Output::new(&AlgebraJson::from(&g)))
}

#[derive(Serialize)]
struct SweepReport {
    kmax: usize,
    points: usize,
    mismatches: usize,
    rows: Vec<SweepRow>,
}

fn sweep_bound() -> Result<usize, CliError> {
    match std::env::var("CORANK2_MAX_K") {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::usage(format!("CORANK2_MAX_K={v:?} is not an integer"))),
        Err(_) => Ok(14),
    }
}

pub fn sweep(kmax: usize) -> Result<Output, CliError> {
    let bound = sweep_bound()?;
    if kmax > bound {
        return Err(CliError::usage(format!(
            "--kmax {kmax} exceeds the bound {bound} (raise CORANK2_MAX_K to allow it)"
        )));
    }
    if kmax < 3 {
        return Err(CliError::usage("--kmax must be at least 3"));
    }
    let rows = corank2_core::bigraded::sweep(kmax)?;
    let mismatches = rows.iter().filter(|r| !r.agrees).count();
    let report = SweepReport {
        kmax,
        points: rows.len(),
        mismatches,
        rows,
    };
    let cells: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| {
            vec![
                r.k.to_string(),
                r.w.to_string(),
                r.d.to_string(),
                r.oracle_dim.to_string(),
                r.reduced_dim.to_string(),
                r.frame_dim.map_or("-".into(), |d| {
                    if frame_has_c(r.k, r.w) {
                        format!("{d} (2k+7)")
                    } else {
                        d.to_string()
                    }
                }),
                if r.agrees { "ok" } else { "MISMATCH" }.into(),
            ]
        })
        .collect();
    let t = format!(
        "{}\n{} points, {} mismatches",
        table(
            &["k", "w", "d", "oracle", "reduced", "frame", "check"],
            &cells
        ),
        report.points,
        report.mismatches
    );
    let failed = mismatches > 0;
    Ok(Output::new(&report).with_table(t).failed_if(failed))
}
