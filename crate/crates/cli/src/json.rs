//! JSON documents. Every document carries a `schema` field naming its kind
//! and version; objects are referred to by label.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use ttgeom_core::frames::FiniteFrame;
use ttgeom_core::spectra::{FiniteSpace, PointPayload};
use ttgeom_core::tensys::{ObjectId, SystemParts, TensorSystem};
use ttgeom_core::verify::{CheckStatus, SuiteReport};
use ttgeom_core::BitSet;

pub const SYSTEM_SCHEMA: &str = "ttgeom.system/1";
pub const BUNDLE_SCHEMA: &str = "ttgeom.bundle/1";

/// Serialized form of a system. `labels[0]` is the zero object and every
/// table is written out in full, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SystemDoc {
    pub schema: String,
    pub labels: Vec<String>,
    pub unit: String,
    pub shift: Vec<String>,
    pub sum: Vec<Vec<String>>,
    pub tensor: Vec<Vec<String>>,
    pub triangles: Vec<[String; 3]>,
    pub summands: Vec<[String; 2]>,
}

#[derive(Debug, thiserror::Error)]
pub enum JsonError {
    #[error("invalid JSON: {0}")]
    Syntax(#[from] serde_json::Error),
    #[error("document has no `schema` field")]
    MissingSchema,
    #[error("unsupported schema `{0}`")]
    UnknownSchema(String),
    #[error("undeclared object {0}")]
    Undeclared(String),
    #[error("{0} table must be {1} by {1}")]
    Shape(&'static str, usize),
    #[error("{0}")]
    System(ttgeom_core::Error),
}

impl SystemDoc {
    pub fn from_system(sys: &TensorSystem) -> Self {
        let l = |o: ObjectId| sys.label(o).to_string();
        let table = |f: &dyn Fn(ObjectId, ObjectId) -> ObjectId| -> Vec<Vec<String>> {
            sys.objects().map(|a| sys.objects().map(|b| l(f(a, b))).collect()).collect()
        };
        SystemDoc {
            schema: SYSTEM_SCHEMA.to_string(),
            labels: sys.labels().to_vec(),
            unit: l(sys.unit()),
            shift: sys.objects().map(|a| l(sys.shift(a))).collect(),
            sum: table(&|a, b| sys.sum(a, b)),
            tensor: table(&|a, b| sys.tensor(a, b)),
            triangles: sys.triangles().iter().map(|&(a, b, c)| [l(a), l(b), l(c)]).collect(),
            summands: sys.summand_pairs().into_iter().map(|(s, t)| [l(s), l(t)]).collect(),
        }
    }

    pub fn to_system(&self) -> Result<TensorSystem, JsonError> {
        if self.schema != SYSTEM_SCHEMA {
            return Err(JsonError::UnknownSchema(self.schema.clone()));
        }
        let n = self.labels.len();
        let id = |label: &String| -> Result<ObjectId, JsonError> {
            self.labels
                .iter()
                .position(|l| l == label)
                .map(ObjectId::new)
                .ok_or_else(|| JsonError::Undeclared(label.clone()))
        };
        let table = |name: &'static str, rows: &[Vec<String>]| -> Result<Vec<ObjectId>, JsonError> {
            if rows.len() != n || rows.iter().any(|r| r.len() != n) {
                return Err(JsonError::Shape(name, n));
            }
            rows.iter().flatten().map(id).collect()
        };
        let parts = SystemParts {
            labels: self.labels.clone(),
            unit: id(&self.unit)?,
            shift: self.shift.iter().map(id).collect::<Result<_, _>>()?,
            sum: table("sum", &self.sum)?,
            tensor: table("tensor", &self.tensor)?,
            triangles: self
                .triangles
                .iter()
                .map(|[a, b, c]| Ok((id(a)?, id(b)?, id(c)?)))
                .collect::<Result<_, JsonError>>()?,
            summands: self.summands.iter().map(|[s, t]| Ok((id(s)?, id(t)?))).collect::<Result<_, JsonError>>()?,
        };
        TensorSystem::from_parts(parts).map_err(JsonError::System)
    }
}

/// Loads a system document, or the `system` member of a bundle.
pub fn load_system(text: &str) -> Result<TensorSystem, JsonError> {
    let value: Value = serde_json::from_str(text)?;
    let schema = value.get("schema").and_then(Value::as_str).ok_or(JsonError::MissingSchema)?;
    let doc = match schema {
        SYSTEM_SCHEMA => value,
        BUNDLE_SCHEMA => value.get("system").cloned().ok_or(JsonError::MissingSchema)?,
        other => return Err(JsonError::UnknownSchema(other.to_string())),
    };
    let doc: SystemDoc = serde_json::from_value(doc)?;
    doc.to_system()
}

pub fn system_value(sys: &TensorSystem) -> Value {
    serde_json::to_value(SystemDoc::from_system(sys)).expect("system documents serialize")
}

/// Labels of the objects in `set`, in index order.
pub fn labels(sys: &TensorSystem, set: BitSet) -> Vec<String> {
    sys.set_labels(set).into_iter().map(str::to_string).collect()
}

pub fn ids(set: BitSet) -> Vec<usize> {
    set.iter().collect()
}

/// The frame as an element list with payloads rendered by `payload`.
pub fn frame_value(frame: &FiniteFrame, payload: &dyn Fn(usize) -> Value) -> Value {
    json!({
        "elements": frame.elements().map(|e| json!({ "id": e, "value": payload(e) })).collect::<Vec<_>>(),
        "bottom": frame.bottom(),
        "top": frame.top(),
        "covers": frame.covers(),
    })
}

pub fn point_payload(sys: &TensorSystem, p: &PointPayload) -> Value {
    match p {
        PointPayload::Prime(i) => json!({ "prime": labels(sys, i.members()) }),
        PointPayload::FramePoint(pt) => json!({ "prime_element": pt.prime_element }),
        PointPayload::FrameElement(e) => json!({ "element": e }),
        PointPayload::Set(s) => json!({ "set": ids(*s) }),
        PointPayload::Plain => Value::Null,
    }
}

pub fn space_value(sys: &TensorSystem, space: &FiniteSpace) -> Value {
    json!({
        "points": space.payload().iter().enumerate()
            .map(|(i, p)| json!({ "id": i, "payload": point_payload(sys, p) }))
            .collect::<Vec<_>>(),
        "opens": space.opens().iter().map(|o| ids(*o)).collect::<Vec<_>>(),
        "specialization": space.specialization(),
        "spectral": ttgeom_core::spectra::is_spectral(space),
    })
}

pub fn status_name(status: CheckStatus) -> &'static str {
    match status {
        CheckStatus::Passed => "PASSED",
        CheckStatus::Failed => "FAILED",
        CheckStatus::Skipped => "SKIPPED",
    }
}

pub fn suite_value(report: &SuiteReport) -> Value {
    json!({
        "assumption_holds": report.assumption_holds,
        "passed": report.passed(),
        "checks": report.checks.iter().map(|c| json!({
            "name": c.name,
            "status": status_name(c.status),
            "instances": c.instances,
            "failures": c.failures,
        })).collect::<Vec<_>>(),
        "notes": report.notes,
    })
}

/// Adds the `schema` field to an object value.
pub fn document(schema: &str, mut body: Value) -> Value {
    if let Value::Object(map) = &mut body {
        map.insert("schema".to_string(), Value::String(schema.to_string()));
    }
    body
}

pub fn to_text(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values serialize");
    s.push('\n');
    s
}
