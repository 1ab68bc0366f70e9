//! Polygon and charge files. Both are JSON documents; the writers emit 17
//! significant digits so values re-parse bit-exactly.
//!
//! Polygon: `{"type": "D5", "vertices": [[re, im], ...],
//!            "punctures": [[re, im], ...], "tolerance": 1e-9}`
//! with vertices counterclockwise, V_0 first; punctures/tolerance optional.
//!
//! Charge: `{"type": "E6", "values": [[re, im], ...]}` with one value per
//! vertex 1..n of the type (projective basis). For folded types the values
//! sit at the orbit representative vertices of the source diagram and the
//! reader reconstructs the full symmetric source charge.

use num_complex::Complex64;
use serde::Deserialize;

use crate::arquiver::ArQuiver;
use crate::charge::{charge_from_hgon_unchecked, CentralCharge};
use crate::dynkin::{folding_data, DynkinType};
use crate::hgon::HGon;
use crate::Error;

#[derive(Deserialize)]
struct PolygonFile {
    #[serde(rename = "type")]
    type_tag: String,
    vertices: Vec<[f64; 2]>,
    #[serde(default)]
    punctures: Vec<[f64; 2]>,
    #[serde(default)]
    tolerance: Option<f64>,
}

#[derive(Deserialize)]
struct ChargeFile {
    #[serde(rename = "type")]
    type_tag: String,
    values: Vec<[f64; 2]>,
}

fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn fmt_pair(z: Complex64) -> String {
    format!("[{}, {}]", fmt17(z.re), fmt17(z.im))
}

pub fn read_polygon(text: &str) -> Result<HGon, Error> {
    let file: PolygonFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let dtype = DynkinType::parse(&file.type_tag)?;
    let verts = file
        .vertices
        .iter()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect();
    let punctures = file
        .punctures
        .iter()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect();
    HGon::new(dtype, verts, punctures, file.tolerance)
}

pub fn write_polygon(g: &HGon) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str(&format!("  \"type\": \"{}\",\n", g.dtype()));
    let verts: Vec<String> = g.vertices().iter().map(|&v| fmt_pair(v)).collect();
    out.push_str(&format!("  \"vertices\": [{}]", verts.join(", ")));
    if !g.punctures().is_empty() {
        let ps: Vec<String> = g.punctures().iter().map(|&p| fmt_pair(p)).collect();
        out.push_str(&format!(",\n  \"punctures\": [{}]", ps.join(", ")));
    }
    out.push_str(&format!(",\n  \"tolerance\": {}\n}}\n", fmt17(g.tolerance())));
    out
}

pub fn read_polygon_file(path: &std::path::Path) -> Result<HGon, Error> {
    read_polygon(&std::fs::read_to_string(path)?)
}

pub fn write_polygon_file(path: &std::path::Path, g: &HGon) -> Result<(), Error> {
    Ok(std::fs::write(path, write_polygon(g))?)
}

/// Orbit representative vertices of the source diagram, in folded vertex
/// order; the identity for simply-laced types.
fn rep_vertices(t: DynkinType) -> Vec<usize> {
    match folding_data(t) {
        Some(f) => f.orbits.iter().map(|orbit| orbit[0]).collect(),
        None => (1..=t.rank()).collect(),
    }
}

pub fn write_charge(z: &CentralCharge) -> String {
    let reps = rep_vertices(z.dtype());
    let vals: Vec<String> = reps
        .iter()
        .map(|&v| fmt_pair(z.projective_values()[v - 1]))
        .collect();
    format!(
        "{{\n  \"type\": \"{}\",\n  \"values\": [{}]\n}}\n",
        z.dtype(),
        vals.join(", ")
    )
}

/// Reads a charge file against the quiver of its type. For a folded type
/// the stored representative values determine the full source charge
/// through the symmetric-charge subspace (spanned by the charges of
/// symmetric polygons).
pub fn read_charge(text: &str, q: &ArQuiver) -> Result<CentralCharge, Error> {
    let file: ChargeFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let dtype = DynkinType::parse(&file.type_tag)?;
    let n = dtype.rank();
    if file.values.len() != n {
        return Err(Error::Parse(format!(
            "{dtype} charge needs {n} values, got {}",
            file.values.len()
        )));
    }
    let given: Vec<Complex64> = file
        .values
        .iter()
        .map(|&[re, im]| Complex64::new(re, im))
        .collect();
    let source = dtype.source();
    if source == dtype {
        return Ok(CentralCharge::from_projective_values(q, dtype, given));
    }
    // basis of the symmetric charge subspace: charges of the chart basis
    let reps = rep_vertices(dtype);
    let mut basis_full: Vec<Vec<Complex64>> = Vec::with_capacity(n);
    for k in 0..n {
        let mut params = vec![Complex64::new(0.0, 0.0); n];
        params[k] = Complex64::new(1.0, 0.0);
        let g = HGon::from_free_coordinates(dtype, &params)?;
        let z = charge_from_hgon_unchecked(&g, q)?;
        basis_full.push(z.projective_values().to_vec());
    }
    // solve sum_k c_k basis[k][rep] = given[rep]
    let mut m: Vec<Vec<Complex64>> = (0..n)
        .map(|r| (0..n).map(|k| basis_full[k][reps[r] - 1]).collect())
        .collect();
    let mut rhs = given;
    solve_complex(&mut m, &mut rhs)?;
    let full: Vec<Complex64> = (0..source.rank())
        .map(|i| (0..n).map(|k| rhs[k] * basis_full[k][i]).sum())
        .collect();
    Ok(CentralCharge::from_projective_values(q, dtype, full))
}

pub fn read_charge_file(path: &std::path::Path, q: &ArQuiver) -> Result<CentralCharge, Error> {
    read_charge(&std::fs::read_to_string(path)?, q)
}

fn solve_complex(m: &mut [Vec<Complex64>], rhs: &mut [Complex64]) -> Result<(), Error> {
    let n = rhs.len();
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&a, &b| m[a][col].norm().total_cmp(&m[b][col].norm()))
            .unwrap();
        if m[pivot][col].norm() < 1e-12 {
            return Err(Error::Degenerate("singular charge system".into()));
        }
        m.swap(col, pivot);
        rhs.swap(col, pivot);
        for r in 0..n {
            if r != col {
                let f = m[r][col] / m[col][col];
                for c in col..n {
                    let sub = f * m[col][c];
                    m[r][c] -= sub;
                }
                let sub = f * rhs[col];
                rhs[r] -= sub;
            }
        }
    }
    for col in 0..n {
        rhs[col] /= m[col][col];
    }
    Ok(())
}
