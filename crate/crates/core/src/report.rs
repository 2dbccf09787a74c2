//! Analysis and decomposition reports as canonical JSON values.
//!
//! Reports never contain timings or other run-dependent data, so the same
//! structure always yields byte-identical output. `report_hash` is the
//! SHA-256 of the report serialized without that field.

use std::collections::BTreeMap;

use serde_json::{json, Map, Value};

use crate::bounds::Bounds;
use crate::decomp;
use crate::error::{Error, Result};
use crate::format::{canonical_json, sha256_hex, StructureFile};
use crate::generators::Structure;
use crate::homs::LnrHom;
use crate::rings::{self, FiniteRing};
use crate::subset::ElementSubset;

/// Which analyses to run; all-false means every applicable one.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AnalyzeOptions {
    pub subloops: bool,
    pub local: bool,
    pub radical: bool,
    pub idempotents: bool,
}

impl AnalyzeOptions {
    fn everything(&self) -> bool {
        !(self.subloops || self.local || self.radical || self.idempotents)
    }
}

fn set(s: &ElementSubset) -> Value {
    json!(s.members())
}

fn sets(v: &[ElementSubset]) -> Value {
    Value::Array(v.iter().map(set).collect())
}

/// Adds `report_hash` over the canonical serialization of `payload`.
pub fn seal(mut payload: Map<String, Value>) -> Value {
    payload.remove("report_hash");
    let hash = sha256_hex(canonical_json(&Value::Object(payload.clone())).as_bytes());
    payload.insert("report_hash".into(), Value::String(hash));
    Value::Object(payload)
}

fn header(s: &Structure) -> Map<String, Value> {
    let file = StructureFile::from_structure(s, BTreeMap::new());
    let mut m = Map::new();
    m.insert("kind".into(), json!(s.kind()));
    m.insert("n".into(), json!(s.n()));
    m.insert("structure_hash".into(), json!(file.content_hash()));
    m
}

/// Runs the requested analyses. In all-analyses mode, enumerations whose
/// bound is exceeded are reported as skipped; explicitly requested ones fail.
pub fn analyze(s: &Structure, opts: &AnalyzeOptions, bounds: &Bounds) -> Result<Value> {
    let all = opts.everything();
    let mut m = header(s);
    let additive = s.additive();

    let mut loop_info = Map::new();
    loop_info.insert("associative".into(), json!(additive.is_associative()));
    loop_info.insert("commutative".into(), json!(additive.is_commutative()));
    if let Some((a, b, c)) = additive.associativity_witness() {
        loop_info.insert("associativity_witness".into(), json!([a, b, c]));
    }
    if opts.subloops || all {
        match additive.enumerate_subloops(bounds) {
            Ok(subs) => {
                let normal = subs
                    .iter()
                    .filter(|k| additive.is_normal_subloop(k).expect("enumerated subloop"))
                    .count();
                loop_info.insert("subloop_count".into(), json!(subs.len()));
                loop_info.insert("normal_subloop_count".into(), json!(normal));
                loop_info.insert("subloops".into(), sets(&subs));
            }
            Err(Error::BoundExceeded { .. }) if all || s.as_lnr().is_some() => {
                loop_info.insert("subloops".into(), json!("skipped: bound exceeded"));
            }
            Err(e) => return Err(e),
        }
    }
    m.insert("additive_loop".into(), Value::Object(loop_info));

    if let Some(lnr) = s.as_lnr() {
        m.insert("zero_symmetric".into(), json!(lnr.is_zero_symmetric()));
        m.insert("one".into(), json!(lnr.one()));
        if opts.idempotents || all {
            let units = lnr.units();
            m.insert("units".into(), set(&units.set));
            m.insert("idempotents".into(), set(&lnr.idempotents()));
        }
        if opts.subloops || opts.local || all {
            if lnr.is_zero_symmetric() {
                let rep = lnr.is_local_lnr(bounds)?;
                m.insert(
                    "locality".into(),
                    json!({
                        "local": rep.local,
                        "via_maximal": rep.via_maximal,
                        "via_units": rep.via_units,
                        "agree": rep.via_maximal == rep.via_units,
                        "n_subloop_count": rep.n_subloop_count,
                        "maximal_n_subloops": sets(&rep.maximal),
                        "unique_maximal": rep.unique_maximal.as_ref().map(set),
                    }),
                );
            } else {
                let maximal = lnr.maximal_n_subloops(bounds)?;
                m.insert(
                    "locality".into(),
                    json!({
                        "local": Value::Null,
                        "reason": "not zero-symmetric",
                        "maximal_n_subloops": sets(&maximal),
                    }),
                );
            }
        }
    }

    if let Some(ring) = s.as_ring() {
        if opts.radical || all {
            let j = rings::jacobson_radical(ring, bounds)?;
            m.insert(
                "ring".into(),
                json!({
                    "radical": set(j.members()),
                    "semisimple": rings::is_semisimple(ring),
                    "semiperfect": rings::is_semiperfect(ring),
                    "local_ring": rings::is_local_ring(ring),
                }),
            );
        } else if opts.local {
            m.insert("ring".into(), json!({ "local_ring": rings::is_local_ring(ring) }));
        }
    }
    Ok(seal(m))
}

pub fn decompose(ring: &FiniteRing, verify_uniqueness: bool, bounds: &Bounds) -> Result<Value> {
    let mut m = header(&Structure::Ring(ring.clone()));
    let family = decomp::decompose_regular(ring, bounds)?;
    let corners = family
        .members()
        .iter()
        .map(|&e| {
            let corner = decomp::corner_ring(ring, e)?;
            Ok(json!({
                "idempotent": e,
                "corner": corner.carrier,
                "corner_size": corner.ring.n(),
                "summand_size": ring.sandwich(e, ring.one()).len(),
                "primitive": decomp::is_primitive(ring, e)?,
                "strongly_indecomposable": decomp::is_strongly_indecomposable_corner(ring, e)?,
                "signature": decomp::corner_signature(ring, e)?.to_string(),
            }))
        })
        .collect::<Result<Vec<Value>>>()?;
    m.insert("family".into(), json!(family.members()));
    m.insert("corners".into(), Value::Array(corners));
    if verify_uniqueness {
        let ks = decomp::verify_ks_uniqueness(ring, bounds)?;
        m.insert(
            "uniqueness".into(),
            json!({
                "family_count": ks.families.len(),
                "families": ks.families.iter().map(|f| f.members().to_vec()).collect::<Vec<_>>(),
                "truncated": ks.truncated,
                "lengths_equal": ks.lengths_equal,
                "all_matched": ks.all_matched,
                "matched_pairs_conjugate": ks.matched_pairs_conjugate,
                "signatures": ks.signatures.iter().map(|s| s.to_string()).collect::<Vec<_>>(),
                "unique": ks.lengths_equal && ks.all_matched && !ks.truncated,
            }),
        );
    }
    Ok(seal(m))
}

pub fn hom(f: &LnrHom<'_>, transfer: bool, bounds: &Bounds) -> Result<Value> {
    let mut m = Map::new();
    m.insert("valid".into(), json!(true));
    m.insert("map".into(), json!(f.map()));
    m.insert("nontrivial".into(), json!(f.is_nontrivial()));
    m.insert("kernel".into(), set(&f.kernel()));
    m.insert("image".into(), set(&f.image()));
    m.insert("unit_reflecting".into(), json!(f.is_unit_reflecting()));
    m.insert("unit_reflection_witness".into(), json!(f.unit_reflection_witness()));
    m.insert("idempotent_lifting".into(), json!(f.is_idempotent_lifting()));
    m.insert("idempotent_lifting_witness".into(), json!(f.idempotent_lifting_witness()));
    if transfer {
        let t = f.verify_local_transfer(bounds)?;
        m.insert(
            "transfer".into(),
            json!({
                "source_local": t.source_local,
                "image_local": t.image_local,
                "target_local": t.target_local,
                "agree": t.source_local == t.image_local,
                "unit_reflecting_into_target": t.unit_reflecting_into_target,
                "unit_reflecting_onto_image": t.unit_reflecting_onto_image,
                "image_size": t.image_size,
                "image_units": t.image_units,
                "target_units_in_image": t.target_units_in_image,
                "idempotent_kill_check": f.idempotent_kill_check()?,
            }),
        );
    }
    Ok(seal(m))
}

/// Human-readable rendering of a report value.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn render(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                match v {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(v, depth + 1, out);
                    }
                    Value::Array(a) if a.iter().any(|x| x.is_object()) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for x in a {
                            out.push_str(&format!("{pad}  -\n"));
                            render(x, depth + 2, out);
                        }
                    }
                    other => out.push_str(&format!("{pad}{k}: {}\n", canonical_json(other))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", canonical_json(other))),
    }
}
