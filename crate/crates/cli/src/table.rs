//! Closed-form-versus-quadrature tables for the `table` subcommand, plus
//! pointwise kernel evaluation for `kernel`. Tables are the quickest way to
//! eyeball whether a quadrature setup resolves the objects it is pointed at:
//! each row shows the analytic value, the integrated value, and the relative
//! gap.

use anyhow::{bail, Context, Result};
use num_complex::Complex64;
use serde::Serialize;

use qsb_core::{
    fock_norm_quadrature, hermite_h, hermite_norm_sq, kernel_norm_sq, kernel_section,
    monomial_inner, FockElement, GaussHermite, ImaginaryUnit, Quaternion, SliceQuadrature,
};

pub const MAX_TABLE_N: usize = 64;
pub const MAX_TABLE_Q: f64 = 3.0;

// rule sizes fixed at the verify defaults; the table exists to check those
const GH_NODES: usize = 128;
const RADIAL_NODES: usize = 96;
const ANGULAR_COUNT: usize = 256;

#[derive(Debug, Clone, Serialize)]
pub struct TableRow {
    pub key: String,
    pub closed_form: f64,
    pub quadrature: f64,
    pub rel_diff: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Table {
    pub kind: &'static str,
    pub nu: f64,
    pub rows: Vec<TableRow>,
}

fn push_row(rows: &mut Vec<TableRow>, key: String, closed_form: f64, quadrature: f64) {
    rows.push(TableRow {
        key,
        closed_form,
        quadrature,
        rel_diff: (quadrature - closed_form).abs() / closed_form.abs().max(1e-300),
    });
}

pub fn monomial_norm_table(nu: f64, max_n: usize) -> Result<Table> {
    check_n(max_n)?;
    let rule = SliceQuadrature::new(nu, RADIAL_NODES, ANGULAR_COUNT)?;
    let unit = ImaginaryUnit::new(0.0, 1.0, 0.0).expect("unit direction");
    let mut rows = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let closed = monomial_inner(n, n, nu)?;
        let quad = fock_norm_quadrature(&FockElement::monomial(nu, n)?, unit, &rule)?;
        push_row(&mut rows, format!("n = {n}"), closed, quad);
    }
    Ok(Table {
        kind: "monomial-norms",
        nu,
        rows,
    })
}

pub fn hermite_norm_table(nu: f64, max_n: usize) -> Result<Table> {
    check_n(max_n)?;
    let rule = GaussHermite::new(GH_NODES)?;
    let mut rows = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let closed = hermite_norm_sq(n, nu)?;
        let quad = rule
            .integrate_gaussian(nu, |x| {
                let h = hermite_h(n, x, nu).expect("validated weight");
                Quaternion::from_real(h * h)
            })?
            .w;
        push_row(&mut rows, format!("n = {n}"), closed, quad);
    }
    Ok(Table {
        kind: "hermite-norms",
        nu,
        rows,
    })
}

pub fn kernel_norm_table(nu: f64, max_q: f64, q_step: f64) -> Result<Table> {
    if !(max_q.is_finite() && (0.0..=MAX_TABLE_Q).contains(&max_q)) {
        bail!("--max-q must lie in [0, {MAX_TABLE_Q}]");
    }
    if !(q_step.is_finite() && q_step > 0.0) {
        bail!("--q-step must be positive");
    }
    let rule = SliceQuadrature::new(nu, RADIAL_NODES, ANGULAR_COUNT)?;
    let point_slice = ImaginaryUnit::new(1.0, 1.0, 1.0).expect("unit direction");
    let integration_unit = ImaginaryUnit::new(0.0, 1.0, 0.0).expect("unit direction");
    let mut rows = Vec::new();
    let mut r = 0.0;
    while r <= max_q + 1e-12 {
        let q = point_slice.embed(Complex64::from_polar(r, 0.6));
        let closed = kernel_norm_sq(q, nu)?;
        let quad = fock_norm_quadrature(&kernel_section(q, nu)?, integration_unit, &rule)?;
        push_row(&mut rows, format!("|q| = {r:.4}"), closed, quad);
        r += q_step;
    }
    Ok(Table {
        kind: "kernel-norms",
        nu,
        rows,
    })
}

fn check_n(max_n: usize) -> Result<()> {
    if max_n > MAX_TABLE_N {
        bail!("--max-n must be at most {MAX_TABLE_N}");
    }
    Ok(())
}

pub fn render_table_human(table: &Table) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} at nu = {}\n", table.kind, table.nu));
    let key_width = table
        .rows
        .iter()
        .map(|r| r.key.len())
        .max()
        .unwrap_or(4)
        .max("key".len());
    out.push_str(&format!(
        "{:key_width$}  {:>24}  {:>24}  {:>12}\n",
        "key", "closed form", "quadrature", "rel diff"
    ));
    for row in &table.rows {
        out.push_str(&format!(
            "{:key_width$}  {:>24.16e}  {:>24.16e}  {:>12.3e}\n",
            row.key, row.closed_form, row.quadrature, row.rel_diff
        ));
    }
    out
}

pub fn render_table_json(table: &Table) -> Result<String> {
    let mut text =
        serde_json::to_string_pretty(table).context("serializing table to JSON")?;
    text.push('\n');
    Ok(text)
}

pub fn render_table_csv(table: &Table) -> String {
    let mut out = String::from("key,closed_form,quadrature,rel_diff\n");
    for row in &table.rows {
        out.push_str(&format!(
            "{},{:e},{:e},{:e}\n",
            row.key, row.closed_form, row.quadrature, row.rel_diff
        ));
    }
    out
}

// ---- pointwise kernel evaluation ----

pub enum KernelRequest {
    TransformKernel { q: Quaternion, x: f64 },
    ReproducingKernel { p: Quaternion, q: Quaternion },
}

pub fn evaluate_kernel(request: &KernelRequest, nu: f64) -> Result<String> {
    let line = match request {
        KernelRequest::TransformKernel { q, x } => {
            let value = qsb_core::kernel_a(*q, *x, nu)?;
            format!("A(q; x) = {value}\n")
        }
        KernelRequest::ReproducingKernel { p, q } => {
            let value = qsb_core::reproducing_kernel(*p, *q, nu)?;
            format!("K(p, q) = {value}\n")
        }
    };
    Ok(line)
}
