//! Coefficient files: CSV with header "n,w,x,y,z", one row per index in
//! increasing order, omitted indices meaning zero. The same format encodes
//! Hermite-expansion coefficients and Fock power-series coefficients.

use std::io::Write;
use std::path::Path;

use anyhow::{bail, Context, Result};
use qsb_core::Quaternion;

const HEADER: [&str; 5] = ["n", "w", "x", "y", "z"];

pub fn read_coeffs(path: &Path) -> Result<Vec<Quaternion>> {
    let mut rdr = csv::ReaderBuilder::new()
        .trim(csv::Trim::All)
        .from_path(path)
        .with_context(|| format!("cannot open {}", path.display()))?;

    let headers = rdr.headers().context("line 1: cannot read header")?;
    if !headers.iter().eq(HEADER) {
        bail!(
            "line 1: expected header n,w,x,y,z, found {:?}",
            headers.iter().collect::<Vec<_>>().join(",")
        );
    }

    let mut coeffs: Vec<Quaternion> = Vec::new();
    let mut last_n: Option<usize> = None;
    for record in rdr.records() {
        let record = record.context("malformed CSV record")?;
        let line = record.position().map(|p| p.line()).unwrap_or(0);
        if record.len() != 5 {
            bail!("line {line}: expected 5 fields, found {}", record.len());
        }
        let n: usize = record[0]
            .parse()
            .with_context(|| format!("line {line}: bad index {:?}", &record[0]))?;
        let mut parts = [0.0f64; 4];
        for (slot, field) in parts.iter_mut().zip(record.iter().skip(1)) {
            *slot = field
                .parse()
                .with_context(|| format!("line {line}: bad component {field:?}"))?;
        }
        if let Some(prev) = last_n {
            if n <= prev {
                bail!("line {line}: indices must increase, found n = {n} after n = {prev}");
            }
        }
        while coeffs.len() < n {
            coeffs.push(Quaternion::ZERO);
        }
        coeffs.push(Quaternion::new(parts[0], parts[1], parts[2], parts[3]));
        last_n = Some(n);
    }
    Ok(coeffs)
}

pub fn write_coeffs<W: Write>(out: W, coeffs: &[Quaternion]) -> Result<()> {
    let mut wtr = csv::Writer::from_writer(out);
    wtr.write_record(HEADER)?;
    for (n, c) in coeffs.iter().enumerate() {
        wtr.write_record([
            n.to_string(),
            c.w.to_string(),
            c.x.to_string(),
            c.y.to_string(),
            c.z.to_string(),
        ])?;
    }
    wtr.flush()?;
    Ok(())
}
