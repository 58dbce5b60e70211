use std::fmt::Write as _;
use std::path::Path;

use serde_json::{json, Value};

use tcbound_core::algebra::{Field, Gf2, Rational};
use tcbound_core::complex::{self, io::ComplexFile};
use tcbound_core::homology::{self, Coefficients, GradedRing};
use tcbound_core::{LabeledComplex, SimplicialComplex};

use crate::io::{display_name, read, read_complex, CliError, Doc};

fn group_text(coeff: Coefficients, rank: usize, torsion: &[u64]) -> String {
    let field = match coeff {
        Coefficients::Z => "Z",
        Coefficients::Z2 => "Z/2",
        Coefficients::Q => "Q",
    };
    let mut parts = Vec::new();
    match rank {
        0 => {}
        1 => parts.push(field.to_string()),
        r if coeff == Coefficients::Z2 => parts.push(format!("(Z/2)^{r}")),
        r => parts.push(format!("{field}^{r}")),
    }
    parts.extend(torsion.iter().map(|t| format!("Z/{t}")));
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" ⊕ ")
    }
}

pub fn homology(path: &Path, coeff: Coefficients) -> Result<Doc, CliError> {
    let (file, k) = read_complex(path)?;
    let (betti, torsion): (Vec<usize>, Vec<Vec<u64>>) = match coeff {
        Coefficients::Z => homology::integral_homology(&k)
            .map_err(CliError::input)?
            .into_iter()
            .map(|g| (g.rank, g.torsion))
            .unzip(),
        field => {
            let b = homology::betti(&k, field).map_err(CliError::input)?;
            let t = vec![Vec::new(); b.len()];
            (b, t)
        }
    };
    let name = display_name(&file, path);
    let mut text = format!("H_*({name}; {coeff})\n");
    for (d, (b, t)) in betti.iter().zip(&torsion).enumerate() {
        let _ = writeln!(text, "  H_{d} = {}", group_text(coeff, *b, t));
    }
    Ok(Doc {
        value: json!({
            "complex": name,
            "coefficients": coeff.to_string(),
            "betti": betti,
            "torsion": torsion,
        }),
        text,
    })
}

fn field_ring<F: Field>(k: &SimplicialComplex, coeff: Coefficients) -> Result<GradedRing<F>, CliError> {
    let r = homology::cohomology_ring::<F>(k);
    r.validate().map_err(|e| CliError::invariant("ring validation", e))?;
    let mut betti = homology::betti(k, coeff).map_err(CliError::input)?;
    while betti.len() > 1 && betti.last() == Some(&0) {
        betti.pop();
    }
    if r.betti() != betti {
        return Err(CliError::invariant(
            "ring Betti numbers match homology",
            format!("ring {:?}, homology {betti:?}", r.betti()),
        ));
    }
    Ok(r)
}

fn names<F: Field>(r: &GradedRing<F>, idx: &[usize]) -> Vec<String> {
    idx.iter().map(|&i| r.name(i).to_string()).collect()
}

fn ring_doc<F: Field>(
    k: &SimplicialComplex,
    name: &str,
    coeff: Coefficients,
    full: bool,
) -> Result<Doc, CliError> {
    let r = field_ring::<F>(k, coeff)?;
    let zcl = homology::zero_divisor_cup_length(&r);
    let zcl_witness = names(&r, &zcl.witness);
    let mut text = String::new();
    let mut value = json!({"complex": name, "coefficients": coeff.to_string(), "betti": r.betti()});
    let obj = value.as_object_mut().expect("object literal");
    if full {
        let torsion: Vec<Vec<u64>> = homology::integral_homology(k)
            .map_err(CliError::input)?
            .into_iter()
            .map(|g| g.torsion)
            .collect();
        let cup = homology::cup_length(&r);
        obj.insert("torsion".into(), json!(torsion));
        obj.insert("generators".into(), json!(names(&r, &homology::indecomposable_generators(&r))));
        obj.insert("products".into(), json!(r.nonzero_products()));
        obj.insert("cup_length".into(), json!(cup.length));
        obj.insert("cup_length_witness".into(), json!(names(&r, &cup.witness)));
        let _ = write!(text, "{r}");
        let _ = writeln!(text, "cup-length: {} ({})", cup.length, names(&r, &cup.witness).join("·"));
    } else {
        let _ = writeln!(text, "H^*({name}; {coeff}), Betti numbers {:?}", r.betti());
    }
    obj.insert("zcl".into(), json!(zcl.length));
    obj.insert("zcl_witness".into(), json!(zcl_witness));
    let factors: Vec<String> = zcl_witness.iter().map(|x| format!("({x}⊗1 − 1⊗{x})")).collect();
    let _ = writeln!(text, "zero-divisor cup-length: {} {}", zcl.length, factors.join(""));
    Ok(Doc { value, text })
}

fn ring_command(path: &Path, coeff: Coefficients, full: bool) -> Result<Doc, CliError> {
    let (file, k) = read_complex(path)?;
    let name = display_name(&file, path);
    match coeff {
        Coefficients::Z2 => ring_doc::<Gf2>(&k, &name, coeff, full),
        Coefficients::Q => ring_doc::<Rational>(&k, &name, coeff, full),
        Coefficients::Z => Err(CliError::Input(
            "cohomology rings need field coefficients; use --coeff q or --coeff z2".into(),
        )),
    }
}

pub fn ring(path: &Path, coeff: Coefficients) -> Result<Doc, CliError> {
    ring_command(path, coeff, true)
}

pub fn zcl(path: &Path, coeff: Coefficients) -> Result<Doc, CliError> {
    ring_command(path, coeff, false)
}

fn summary(k: &SimplicialComplex) -> Result<Value, CliError> {
    Ok(json!({
        "dim": k.dim(),
        "f_vector": k.f_vector(),
        "betti_z2": homology::betti(k, Coefficients::Z2).map_err(CliError::input)?,
        "betti_q": homology::betti(k, Coefficients::Q).map_err(CliError::input)?,
    }))
}

fn complex_value(k: &LabeledComplex) -> Value {
    serde_json::to_value(ComplexFile::from(k)).expect("complexes serialize")
}

fn summary_text(label: &str, s: &Value) -> String {
    format!(
        "{label}: dim {}, f-vector {}, Betti over Z/2 {}, over Q {}\n",
        s["dim"], s["f_vector"], s["betti_z2"], s["betti_q"]
    )
}

/// The nerve and the order complex of the complement are different models of the same
/// homotopy type, so their Betti numbers must agree whenever both exist.
pub fn complement(path: &Path, sub: &Path) -> Result<Doc, CliError> {
    let (_, k) = read_complex(path)?;
    let file: ComplexFile = read(sub)?;
    let l = file
        .to_subcomplex()
        .map_err(|e| CliError::Input(format!("{}: {e}", sub.display())))?;
    let full = complex::is_full_subcomplex(&k, &l).map_err(CliError::input)?;
    let order = complex::complement_complex(&k, &l).map_err(CliError::input)?;
    order
        .check_labels(&k)
        .map_err(|e| CliError::invariant("order complex labels are simplices of K", e))?;
    let order_summary = summary(&order.complex)?;
    let mut text = format!("full: {full}\n");
    text.push_str(&summary_text("order complex", &order_summary));
    let mut value = json!({"full": full, "order": order_summary});
    if full {
        let nerve = complex::complement_nerve(&k, &l).map_err(CliError::input)?;
        let nerve_summary = summary(&nerve.complex)?;
        for key in ["betti_z2", "betti_q"] {
            if nerve_summary[key] != order_summary[key] {
                return Err(CliError::invariant(
                    "nerve and order complex have equal Betti numbers",
                    format!("{key}: nerve {}, order {}", nerve_summary[key], order_summary[key]),
                ));
            }
        }
        text.push_str(&summary_text("nerve", &nerve_summary));
        value["nerve"] = nerve_summary;
        value["nerve_complex"] = complex_value(&nerve);
    }
    value["order_complex"] = complex_value(&order);
    Ok(Doc { value, text })
}

pub fn skeleton(path: &Path, r: usize) -> Result<Doc, CliError> {
    let (_, k) = read_complex(path)?;
    let sk = complex::skeleton(&k, r);
    let mut text = format!("{r}-skeleton: dim {}, f-vector {:?}\n", sk.dim(), sk.f_vector());
    let mut value = json!({"r": r, "dim": sk.dim(), "f_vector": sk.f_vector()});
    if r < k.dim() {
        let d = complex::skeleton_complement_dimension(&k, r).map_err(CliError::input)?;
        if d + r + 1 > k.dim() {
            return Err(CliError::invariant(
                "complement of the r-skeleton has dimension at most dim K − r − 1",
                format!("dim K = {}, r = {r}, complement dimension {d}", k.dim()),
            ));
        }
        let _ = writeln!(text, "complement dimension: {d} (≤ {})", k.dim() - r - 1);
        value["complement_dim"] = json!(d);
    }
    value["maximal_simplices"] = serde_json::to_value(ComplexFile::from(&sk).maximal_simplices)
        .expect("simplices serialize");
    Ok(Doc { value, text })
}

pub fn subdivide(path: &Path) -> Result<Doc, CliError> {
    let (_, k) = read_complex(path)?;
    let sd = complex::barycentric_subdivision(&k);
    sd.check_labels(&k)
        .map_err(|e| CliError::invariant("subdivision labels are simplices of K", e))?;
    let s = summary(&sd.complex)?;
    Ok(Doc { text: summary_text("subdivision", &s), value: complex_value(&sd) })
}

pub fn product(a: &Path, b: &Path) -> Result<Doc, CliError> {
    let (_, k) = read_complex(a)?;
    let (_, l) = read_complex(b)?;
    let p = complex::product(&k, &l);
    let s = summary(&p)?;
    Ok(Doc {
        text: summary_text("product", &s),
        value: serde_json::to_value(ComplexFile::from(&p)).expect("complexes serialize"),
    })
}
