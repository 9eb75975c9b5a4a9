//! Text and JSON rendering.
//!
//! Every invocation produces one JSON object with the keys `field`,
//! `degree`, `operation`, `result`, `witnesses` and `violations`. Field
//! elements and polynomials are strings; keys are sorted.

use serde_json::{json, Value};

use ramify::construct::FamilyWitness;
use ramify::enumerate::{ClassRecord, EnumerationReport, FamilySummary, Violation};
use ramify::{Field, Poly, RamificationProfile, StandardForm};

/// Field header: `p`, `n`, `order` and the modulus in `t` (null for prime fields).
pub fn field_json(f: &Field) -> Value {
    json!({
        "p": f.characteristic(),
        "n": f.extension_degree(),
        "order": f.order().to_string(),
        "modulus": modulus_text(f),
    })
}

pub fn modulus_text(f: &Field) -> Option<String> {
    let m = f.modulus()?;
    Some(Poly::from_raw(f.prime_field(), m).format_with("t"))
}

pub fn field_text(f: &Field) -> String {
    match modulus_text(f) {
        Some(m) => format!("{f} = F_{}[t]/({m})", f.characteristic()),
        None => f.to_string(),
    }
}

pub fn profile_json(p: &RamificationProfile) -> Value {
    let entries: Vec<Value> = p
        .entries()
        .iter()
        .map(|(pt, l)| json!({"point": pt.to_string(), "length": l}))
        .collect();
    json!({
        "display": p.to_string(),
        "field": field_json(p.field()),
        "entries": entries,
    })
}

pub fn form_json(s: &StandardForm) -> Value {
    json!({
        "standard_form": s.to_string(),
        "g": s.g().to_string(),
        "h": s.h().to_string(),
    })
}

pub fn class_json(c: &ClassRecord) -> Value {
    json!({
        "standard_form": c.form.to_string(),
        "profile": profile_json(&c.profile),
    })
}

pub fn violation_json(v: &Violation) -> Value {
    json!({"standard_form": v.form.to_string(), "diagnostic": v.diagnostic})
}

pub fn member_json(w: &FamilyWitness) -> Value {
    json!({
        "t": w.parameter.to_string(),
        "member": w.member.to_string(),
        "standard_form": w.standard_form.to_string(),
        "wronskian": w.wronskian.to_string(),
        "descends": w.descends,
    })
}

pub fn family_json(f: &FamilySummary) -> Value {
    let ext = f.members.first().map(|w| field_json(w.parameter.field()));
    json!({
        "base": f.base.to_string(),
        "moved_point": f.point.to_string(),
        "moved": f.moved.to_string(),
        "wronskian": f.wronskian.to_string(),
        "extension": ext,
        "members": f.members.iter().map(member_json).collect::<Vec<_>>(),
        "non_descending": f.non_descending(),
    })
}

pub fn enumeration_result(r: &EnumerationReport) -> Value {
    json!({
        "filter": r.filter,
        "scanned": r.scanned,
        "classes": r.classes.len(),
        "violations": r.violations.len(),
        "verified": r.is_verified(),
        "fibers": r.fibers.iter().map(|f| json!({"divisor": f.divisor.to_string(), "count": f.count})).collect::<Vec<_>>(),
    })
}

/// The output of one command.
#[derive(Debug, Clone)]
pub struct Report {
    pub field: Field,
    pub degree: Option<usize>,
    pub operation: &'static str,
    pub result: Value,
    pub witnesses: Vec<Value>,
    pub violations: Vec<Value>,
    pub lines: Vec<String>,
    pub code: i32,
}

impl Report {
    pub fn new(field: &Field, operation: &'static str) -> Report {
        Report {
            field: field.clone(),
            degree: None,
            operation,
            result: Value::Null,
            witnesses: Vec::new(),
            violations: Vec::new(),
            lines: Vec::new(),
            code: 0,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "field": field_json(&self.field),
            "degree": self.degree,
            "operation": self.operation,
            "result": self.result,
            "witnesses": self.witnesses,
            "violations": self.violations,
        })
    }

    pub fn render(&self, as_json: bool) -> String {
        if as_json {
            let mut s = serde_json::to_string_pretty(&self.to_json()).expect("serializable");
            s.push('\n');
            return s;
        }
        let mut out = format!("field {}\n", field_text(&self.field));
        for l in &self.lines {
            out.push_str(l);
            out.push('\n');
        }
        out
    }
}
