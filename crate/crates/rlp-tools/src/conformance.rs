//! JSON conformance suites and the machinery to run them.
//!
//! A suite file is one JSON object: case names map to `{"in": ..., "out":
//! ...}` pairs. For encoding cases, `in` is a test item — a text string
//! (UTF-8 bytes), a non-negative integer, a `"#..."` decimal string for
//! integers past the JSON number range, or a list of items — and `out` is
//! the expected encoding in hex. For rejection cases, `in` is the literal
//! marker `"INVALID"` and `out` is a byte string the decoder must refuse.
//! (The marker makes the one text string `"INVALID"` inexpressible as an
//! input; spell it `0x494e56414c4944` in tree text if you ever need it.)
//!
//! Every encoding case checks both directions: the item must encode to
//! exactly `out`, and `out` must decode back to the item's tree. Cases run
//! in name order, and the outcome is a [`ConformanceReport`] that
//! serializes to JSON for archiving next to the suite.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use num_bigint::BigUint;
use rlp_core::{decode_tree, encode_tree, RlpTree};
use serde::Serialize;

use crate::hexstr::{format_hex, parse_hex};
use crate::treetext::{biguint_min_be, format_tree_text};

/// The input side of an encoding case.
#[derive(Debug, Clone, PartialEq)]
pub enum TestItem {
    /// A text string; its UTF-8 bytes are the leaf payload.
    Text(String),
    /// A non-negative integer of any size; its minimal big-endian bytes are
    /// the leaf payload.
    Scalar(BigUint),
    /// A list of items.
    List(Vec<TestItem>),
}

/// The tree a test item stands for.
pub fn item_to_tree(item: &TestItem) -> RlpTree {
    match item {
        TestItem::Text(text) => RlpTree::Leaf(text.as_bytes().to_vec()),
        TestItem::Scalar(number) => RlpTree::Leaf(biguint_min_be(number)),
        TestItem::List(items) => RlpTree::Branch(items.iter().map(item_to_tree).collect()),
    }
}

/// One named case from a suite file.
#[derive(Debug, Clone)]
pub struct ConformanceCase {
    pub name: String,
    pub kind: CaseKind,
}

/// What a case demands.
#[derive(Debug, Clone)]
pub enum CaseKind {
    /// `in` must encode to exactly `expected`, which must decode back.
    Encode { item: TestItem, expected: Vec<u8> },
    /// `in` was the INVALID marker: the decoder must refuse `encoding`.
    Reject { encoding: Vec<u8> },
}

/// The outcome of one case.
#[derive(Debug, Clone, Serialize)]
pub struct CaseResult {
    pub name: String,
    /// `"pass"` or `"fail"`.
    pub verdict: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub actual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CaseResult {
    fn pass(name: &str) -> Self {
        CaseResult { name: name.into(), verdict: "pass", expected: None, actual: None, error: None }
    }

    fn fail(
        name: &str,
        expected: Option<String>,
        actual: Option<String>,
        error: Option<String>,
    ) -> Self {
        CaseResult { name: name.into(), verdict: "fail", expected, actual, error }
    }

    pub fn is_pass(&self) -> bool {
        self.verdict == "pass"
    }
}

/// Everything a suite run produces, ready to serialize.
#[derive(Debug, Serialize)]
pub struct ConformanceReport {
    /// The suite file the report describes.
    pub suite: String,
    /// Seconds since the Unix epoch when the run happened.
    pub timestamp: u64,
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub cases: Vec<CaseResult>,
}

impl ConformanceReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }
}

/// A problem with the suite file itself, as opposed to a failing case.
#[derive(Debug)]
pub enum SuiteError {
    Io(PathBuf, std::io::Error),
    Json(serde_json::Error),
    /// The file parsed, but its top level is not an object of cases.
    NotAnObject,
}

impl fmt::Display for SuiteError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SuiteError::Io(path, err) => write!(f, "cannot read suite {}: {err}", path.display()),
            SuiteError::Json(err) => write!(f, "suite is not valid JSON: {err}"),
            SuiteError::NotAnObject => {
                write!(f, "a suite must be a JSON object mapping case names to cases")
            }
        }
    }
}

impl std::error::Error for SuiteError {
    fn source(&self) -> Option<&(dyn std::error::Error + 'static)> {
        match self {
            SuiteError::Io(_, err) => Some(err),
            SuiteError::Json(err) => Some(err),
            SuiteError::NotAnObject => None,
        }
    }
}

/// Loads and runs every case in the suite at `path`, in name order.
///
/// Case-level problems — unparseable items, bad hex, wrong encodings —
/// become failing case results; only an unreadable or structurally invalid
/// file is a [`SuiteError`]. Unknown case fields are warned about on stderr
/// and ignored.
pub fn run_suite(path: &Path) -> Result<ConformanceReport, SuiteError> {
    let text = fs::read_to_string(path).map_err(|err| SuiteError::Io(path.to_path_buf(), err))?;
    let root: serde_json::Value = serde_json::from_str(&text).map_err(SuiteError::Json)?;
    let serde_json::Value::Object(entries) = root else {
        return Err(SuiteError::NotAnObject);
    };

    let mut cases = Vec::with_capacity(entries.len());
    for (name, value) in &entries {
        let result = match parse_case(name, value) {
            Ok(case) => run_case(&case),
            Err(reason) => CaseResult::fail(name, None, None, Some(reason)),
        };
        cases.push(result);
    }
    let passed = cases.iter().filter(|case| case.is_pass()).count();
    Ok(ConformanceReport {
        suite: path.display().to_string(),
        timestamp: unix_now(),
        total: cases.len(),
        passed,
        failed: cases.len() - passed,
        cases,
    })
}

/// Where a report lands by default: the suite path with its extension
/// replaced by `report.json`.
pub fn report_path_for(suite: &Path) -> PathBuf {
    suite.with_extension("report.json")
}

fn unix_now() -> u64 {
    SystemTime::now().duration_since(UNIX_EPOCH).map(|elapsed| elapsed.as_secs()).unwrap_or(0)
}

fn parse_case(name: &str, value: &serde_json::Value) -> Result<ConformanceCase, String> {
    let serde_json::Value::Object(fields) = value else {
        return Err("case is not a JSON object".into());
    };
    for key in fields.keys() {
        if key != "in" && key != "out" {
            eprintln!("warning: case {name}: ignoring unknown field {key:?}");
        }
    }
    let input = fields.get("in").ok_or("case has no \"in\" field")?;
    let output = fields.get("out").ok_or("case has no \"out\" field")?;
    let serde_json::Value::String(out_text) = output else {
        return Err("\"out\" must be a hex string".into());
    };
    let out_bytes = parse_hex(out_text).map_err(|err| format!("bad \"out\" hex: {err}"))?;

    let kind = if matches!(input, serde_json::Value::String(text) if text == "INVALID") {
        CaseKind::Reject { encoding: out_bytes }
    } else {
        CaseKind::Encode { item: item_from_value(input)?, expected: out_bytes }
    };
    Ok(ConformanceCase { name: name.into(), kind })
}

fn item_from_value(value: &serde_json::Value) -> Result<TestItem, String> {
    match value {
        serde_json::Value::String(text) => match text.strip_prefix('#') {
            None => Ok(TestItem::Text(text.clone())),
            Some(digits) => {
                if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                    return Err(format!("bad big-integer string {text:?}"));
                }
                Ok(TestItem::Scalar(digits.parse().expect("digits checked above")))
            }
        },
        serde_json::Value::Number(number) => match number.as_u64() {
            Some(value) => Ok(TestItem::Scalar(BigUint::from(value))),
            None => Err(format!("{number} is not a non-negative integer")),
        },
        serde_json::Value::Array(items) => {
            let items: Result<Vec<TestItem>, String> = items.iter().map(item_from_value).collect();
            Ok(TestItem::List(items?))
        }
        other => Err(format!("unsupported input value {other}")),
    }
}

fn run_case(case: &ConformanceCase) -> CaseResult {
    let name = &case.name;
    match &case.kind {
        CaseKind::Encode { item, expected } => {
            let tree = item_to_tree(item);
            let actual = match encode_tree(&tree) {
                Ok(bytes) => bytes,
                Err(err) => {
                    return CaseResult::fail(
                        name,
                        Some(format_hex(expected)),
                        None,
                        Some(format!("encoding failed: {err}")),
                    )
                }
            };
            if actual != *expected {
                return CaseResult::fail(
                    name,
                    Some(format_hex(expected)),
                    Some(format_hex(&actual)),
                    None,
                );
            }
            // The other direction: the expected bytes must mean the item.
            match decode_tree(expected) {
                Ok(decoded) if decoded == tree => CaseResult::pass(name),
                Ok(decoded) => CaseResult::fail(
                    name,
                    Some(format_tree_text(&tree)),
                    Some(format_tree_text(&decoded)),
                    Some("the expected bytes decode to a different tree".into()),
                ),
                Err(err) => CaseResult::fail(
                    name,
                    Some(format_hex(expected)),
                    None,
                    Some(format!("the expected bytes do not decode: {err}")),
                ),
            }
        }
        CaseKind::Reject { encoding } => match decode_tree(encoding) {
            Err(_) => CaseResult::pass(name),
            Ok(tree) => CaseResult::fail(
                name,
                Some("rejection".into()),
                Some(format_tree_text(&tree)),
                Some("the decoder accepted bytes marked INVALID".into()),
            ),
        },
    }
}
