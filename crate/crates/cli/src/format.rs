//! The line-oriented system description format.
//!
//! A document is a sequence of sections, each opened by a `[name]` header.
//! `#` starts a comment. See `docs/FORMAT.md` for the grammar.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use ttgeom_core::tensys::{summand_closure, ObjectId, SystemParts, TensorSystem, Triangle};

const SECTIONS: [&str; 9] = ["objects", "zero", "unit", "shift", "sum", "tensor", "triangles", "summands", "options"];

/// A parse or resolution error at a 1-based line and column.
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
struct Pos {
    line: usize,
    column: usize,
}

impl Pos {
    fn error(self, message: impl Into<String>) -> ParseError {
        ParseError { line: self.line, column: self.column, message: message.into() }
    }
}

#[derive(Clone, Debug)]
struct Token {
    text: String,
    pos: Pos,
}

/// Character cursor over one line, tracking 1-based columns.
struct Cursor {
    chars: Vec<char>,
    at: usize,
    line: usize,
}

fn is_label_char(c: char) -> bool {
    c.is_ascii_alphanumeric() || matches!(c, '_' | '\'' | '.')
}

impl Cursor {
    fn new(src: &str, line: usize) -> Self {
        Cursor { chars: src.chars().collect(), at: 0, line }
    }

    fn pos(&self) -> Pos {
        Pos { line: self.line, column: self.at + 1 }
    }

    fn skip_ws(&mut self) {
        while self.chars.get(self.at).is_some_and(|c| c.is_whitespace()) {
            self.at += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.at >= self.chars.len()
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.at).copied()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.at += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, c: char) -> Result<(), ParseError> {
        if self.eat(c) {
            Ok(())
        } else {
            Err(self.pos().error(format!("expected `{c}`")))
        }
    }

    fn eat_str(&mut self, s: &str) -> bool {
        self.skip_ws();
        let want: Vec<char> = s.chars().collect();
        if self.chars[self.at..].starts_with(&want) {
            self.at += want.len();
            true
        } else {
            false
        }
    }

    fn label(&mut self) -> Result<Token, ParseError> {
        self.skip_ws();
        let pos = self.pos();
        let start = self.at;
        while self.chars.get(self.at).is_some_and(|&c| is_label_char(c)) {
            self.at += 1;
        }
        if start == self.at {
            return Err(pos.error("expected an object label"));
        }
        Ok(Token { text: self.chars[start..self.at].iter().collect(), pos })
    }

    fn finish(&mut self) -> Result<(), ParseError> {
        if self.at_end() {
            Ok(())
        } else {
            Err(self.pos().error("unexpected trailing input"))
        }
    }
}

#[derive(Default)]
struct Raw {
    objects: Vec<Token>,
    zero: Option<Token>,
    unit: Option<Token>,
    shift: Vec<(Token, Token)>,
    sum: Vec<(Token, Token, Token)>,
    order: Vec<(Token, Token)>,
    tensor: Vec<(Token, Token, Token)>,
    triangles: Vec<(Token, Token, Token)>,
    summands: Vec<(Token, Token)>,
    complete_triangles: bool,
    headers: BTreeMap<&'static str, Pos>,
    end: Pos,
}

/// `op(a, b) = c`, with `op` already consumed.
fn binary_entry(cur: &mut Cursor) -> Result<(Token, Token, Token), ParseError> {
    cur.expect('(')?;
    let a = cur.label()?;
    cur.expect(',')?;
    let b = cur.label()?;
    cur.expect(')')?;
    cur.expect('=')?;
    let c = cur.label()?;
    cur.finish()?;
    Ok((a, b, c))
}

fn keyword(cur: &mut Cursor, word: &str) -> Result<(), ParseError> {
    let pos = {
        cur.skip_ws();
        cur.pos()
    };
    if cur.eat_str(word) {
        Ok(())
    } else {
        Err(pos.error(format!("expected `{word}(...)`")))
    }
}

fn parse_raw(text: &str) -> Result<Raw, ParseError> {
    let mut raw = Raw::default();
    let mut section: Option<&'static str> = None;
    let mut last_line = 0;
    for (i, full) in text.lines().enumerate() {
        let line_no = i + 1;
        last_line = line_no;
        let content = full.split('#').next().unwrap_or("");
        let mut cur = Cursor::new(content, line_no);
        if cur.at_end() {
            continue;
        }
        let trimmed = content.trim();
        if trimmed.starts_with('[') && trimmed.ends_with(']') {
            let pos = cur.pos();
            let name = trimmed[1..trimmed.len() - 1].trim();
            let known = SECTIONS.iter().find(|s| **s == name).ok_or_else(|| pos.error(format!("unknown section `{name}`")))?;
            if raw.headers.insert(known, pos).is_some() {
                return Err(pos.error(format!("section `{name}` appears twice")));
            }
            section = Some(known);
            continue;
        }
        let Some(current) = section else {
            return Err(cur.pos().error("content before the first section header"));
        };
        match current {
            "objects" => {
                while !cur.at_end() {
                    raw.objects.push(cur.label()?);
                    cur.eat(',');
                }
            }
            "zero" | "unit" => {
                let t = cur.label()?;
                cur.finish()?;
                let slot = if current == "zero" { &mut raw.zero } else { &mut raw.unit };
                if slot.is_some() {
                    return Err(t.pos.error(format!("`{current}` is declared twice")));
                }
                *slot = Some(t);
            }
            "shift" => {
                keyword(&mut cur, "shift")?;
                cur.expect('(')?;
                let a = cur.label()?;
                cur.expect(')')?;
                cur.expect('=')?;
                let b = cur.label()?;
                cur.finish()?;
                raw.shift.push((a, b));
            }
            "sum" => {
                let save = cur.at;
                let first = cur.label()?;
                if first.text == "sum" && cur.peek() == Some('(') {
                    raw.sum.push(binary_entry(&mut cur)?);
                } else {
                    cur.at = save;
                    let a = cur.label()?;
                    if !cur.eat_str("<=") {
                        return Err(cur.pos().error("expected `sum(a, b) = c` or `a <= b`"));
                    }
                    let b = cur.label()?;
                    cur.finish()?;
                    raw.order.push((a, b));
                }
            }
            "tensor" => {
                keyword(&mut cur, "tensor")?;
                raw.tensor.push(binary_entry(&mut cur)?);
            }
            "triangles" => {
                cur.expect('(')?;
                let a = cur.label()?;
                cur.expect(',')?;
                let b = cur.label()?;
                cur.expect(',')?;
                let c = cur.label()?;
                cur.expect(')')?;
                cur.finish()?;
                raw.triangles.push((a, b, c));
            }
            "summands" => {
                keyword(&mut cur, "summand")?;
                cur.expect('(')?;
                let s = cur.label()?;
                cur.expect(',')?;
                let t = cur.label()?;
                cur.expect(')')?;
                cur.finish()?;
                raw.summands.push((s, t));
            }
            "options" => {
                let key = cur.label()?;
                cur.expect('=')?;
                let value = cur.label()?;
                cur.finish()?;
                match (key.text.as_str(), value.text.as_str()) {
                    ("complete_triangles", "true") => raw.complete_triangles = true,
                    ("complete_triangles", "false") => raw.complete_triangles = false,
                    ("complete_triangles", _) => return Err(value.pos.error("expected `true` or `false`")),
                    (other, _) => return Err(key.pos.error(format!("unknown option `{other}`"))),
                }
            }
            _ => unreachable!("sections are restricted to the known list"),
        }
    }
    raw.end = Pos { line: last_line.max(1), column: 1 };
    Ok(raw)
}

/// Parses a system description. Entries forced by the axioms may be
/// omitted: `sum(a, a)`, `sum` with the zero, the mirror image of a given
/// `sum` entry, and `tensor` with the zero or the unit. When `a <= b` order
/// lines are present the sum is their join.
pub fn parse_system(text: &str) -> Result<TensorSystem, ParseError> {
    let raw = parse_raw(text)?;
    let header = |name: &str| raw.headers.get(name).copied().unwrap_or(raw.end);
    if raw.objects.is_empty() {
        return Err(header("objects").error("no objects declared"));
    }
    let zero_tok = raw.zero.clone().ok_or_else(|| header("zero").error("missing `[zero]` section"))?;
    let unit_tok = raw.unit.clone().ok_or_else(|| header("unit").error("missing `[unit]` section"))?;

    // zero first, the rest in declared order
    let mut labels: Vec<String> = Vec::new();
    let mut declared: BTreeMap<String, Pos> = BTreeMap::new();
    for t in &raw.objects {
        if declared.insert(t.text.clone(), t.pos).is_some() {
            return Err(t.pos.error(format!("object {} declared twice", t.text)));
        }
    }
    if !declared.contains_key(&zero_tok.text) {
        return Err(zero_tok.pos.error(format!("undeclared object {}", zero_tok.text)));
    }
    labels.push(zero_tok.text.clone());
    labels.extend(raw.objects.iter().map(|t| t.text.clone()).filter(|l| *l != zero_tok.text));
    let n = labels.len();
    if n > TensorSystem::MAX_OBJECTS {
        return Err(header("objects").error(format!("at most {} objects are supported", TensorSystem::MAX_OBJECTS)));
    }
    let index: BTreeMap<&str, usize> = labels.iter().enumerate().map(|(i, l)| (l.as_str(), i)).collect();
    let resolve = |t: &Token| -> Result<usize, ParseError> {
        index.get(t.text.as_str()).copied().ok_or_else(|| t.pos.error(format!("undeclared object {}", t.text)))
    };
    let unit = resolve(&unit_tok)?;
    let mut mentioned: Vec<&Token> = Vec::new();
    for (a, b) in raw.shift.iter().chain(&raw.order).chain(&raw.summands) {
        mentioned.extend([a, b]);
    }
    for (a, b, c) in raw.sum.iter().chain(&raw.tensor).chain(&raw.triangles) {
        mentioned.extend([a, b, c]);
    }
    mentioned.sort_by_key(|t| (t.pos.line, t.pos.column));
    for t in mentioned {
        resolve(t)?;
    }

    let shift = if raw.shift.is_empty() {
        (0..n).collect()
    } else {
        let mut table = vec![None; n];
        for (a, b) in &raw.shift {
            let (ia, ib) = (resolve(a)?, resolve(b)?);
            if table[ia].is_some_and(|old| old != ib) {
                return Err(a.pos.error(format!("conflicting entries for shift({})", a.text)));
            }
            table[ia] = Some(ib);
        }
        let missing = (0..n).find(|&i| table[i].is_none());
        if let Some(i) = missing {
            return Err(header("shift").error(format!("non-total shift table: missing shift({})", labels[i])));
        }
        table.into_iter().map(|e| e.expect("checked")).collect::<Vec<_>>()
    };

    let mut sum: Vec<Option<usize>> = vec![None; n * n];
    let put = |table: &mut Vec<Option<usize>>, a: usize, b: usize, c: usize, pos: Pos, op: &str| {
        match table[a * n + b] {
            Some(old) if old != c => Err(pos.error(format!("conflicting entries for {op}({}, {})", labels[a], labels[b]))),
            _ => {
                table[a * n + b] = Some(c);
                Ok(())
            }
        }
    };
    if !raw.order.is_empty() {
        let joins = order_joins(n, &raw.order, &resolve)?;
        for (k, j) in joins.into_iter().enumerate() {
            sum[k] = Some(j.ok_or_else(|| {
                raw.order[0].0.pos.error(format!(
                    "declared order has no join for {} and {}",
                    labels[k / n],
                    labels[k % n]
                ))
            })?);
        }
    }
    for (a, b, c) in &raw.sum {
        let (ia, ib, ic) = (resolve(a)?, resolve(b)?, resolve(c)?);
        if !raw.order.is_empty() && sum[ia * n + ib] != Some(ic) {
            return Err(a.pos.error(format!("sum({}, {}) = {} contradicts the declared order", a.text, b.text, c.text)));
        }
        put(&mut sum, ia, ib, ic, a.pos, "sum")?;
    }
    for (a, b, c) in &raw.sum {
        let (ia, ib, ic) = (resolve(a)?, resolve(b)?, resolve(c)?);
        if sum[ib * n + ia].is_none() {
            sum[ib * n + ia] = Some(ic);
        }
    }
    for a in 0..n {
        sum[a * n + a].get_or_insert(a);
        sum[a].get_or_insert(a);
        sum[a * n].get_or_insert(a);
    }
    let sum = total(sum, n, &labels, "sum", header("sum"))?;

    let mut tensor: Vec<Option<usize>> = vec![None; n * n];
    for (a, b, c) in &raw.tensor {
        let (ia, ib, ic) = (resolve(a)?, resolve(b)?, resolve(c)?);
        put(&mut tensor, ia, ib, ic, a.pos, "tensor")?;
    }
    for a in 0..n {
        tensor[a].get_or_insert(0);
        tensor[a * n].get_or_insert(0);
        tensor[unit * n + a].get_or_insert(a);
        tensor[a * n + unit].get_or_insert(a);
    }
    let tensor = total(tensor, n, &labels, "tensor", header("tensor"))?;

    let mut triangles: Vec<Triangle> = Vec::new();
    for (a, b, c) in &raw.triangles {
        triangles.push((ObjectId::new(resolve(a)?), ObjectId::new(resolve(b)?), ObjectId::new(resolve(c)?)));
    }
    let sum: Vec<ObjectId> = sum.into_iter().map(ObjectId::new).collect();
    let mut extra = Vec::new();
    for (s, t) in &raw.summands {
        extra.push((ObjectId::new(resolve(s)?), ObjectId::new(resolve(t)?)));
    }
    let parts = SystemParts {
        labels,
        unit: ObjectId::new(unit),
        shift: shift.into_iter().map(ObjectId::new).collect(),
        summands: summand_closure(n, &sum, &extra),
        sum,
        tensor: tensor.into_iter().map(ObjectId::new).collect(),
        triangles,
    };
    let sys = TensorSystem::from_parts(parts).map_err(|e| header("objects").error(e.to_string()))?;
    Ok(if raw.complete_triangles { sys.complete_triangles() } else { sys })
}

fn total(table: Vec<Option<usize>>, n: usize, labels: &[String], op: &str, at: Pos) -> Result<Vec<usize>, ParseError> {
    table
        .into_iter()
        .enumerate()
        .map(|(k, e)| {
            e.ok_or_else(|| at.error(format!("non-total {op} table: missing {op}({}, {})", labels[k / n], labels[k % n])))
        })
        .collect()
}

/// Least upper bounds in the reflexive-transitive closure of the declared
/// order, with the zero (index 0) below everything.
fn order_joins(
    n: usize,
    order: &[(Token, Token)],
    resolve: &dyn Fn(&Token) -> Result<usize, ParseError>,
) -> Result<Vec<Option<usize>>, ParseError> {
    let mut le = vec![false; n * n];
    for a in 0..n {
        le[a * n + a] = true;
        le[a] = true;
    }
    for (a, b) in order {
        le[resolve(a)? * n + resolve(b)?] = true;
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if le[i * n + k] && le[k * n + j] {
                    le[i * n + j] = true;
                }
            }
        }
    }
    if let Some((a, b)) = order.iter().find(|(a, b)| {
        let (ia, ib) = (resolve(a).unwrap_or(0), resolve(b).unwrap_or(0));
        ia != ib && le[ib * n + ia]
    }) {
        return Err(a.pos.error(format!("declared order has a cycle through {} and {}", a.text, b.text)));
    }
    Ok((0..n * n)
        .map(|k| {
            let (a, b) = (k / n, k % n);
            let upper: Vec<usize> = (0..n).filter(|&c| le[a * n + c] && le[b * n + c]).collect();
            upper.iter().copied().find(|&m| upper.iter().all(|&o| le[m * n + o]))
        })
        .collect())
}

/// Writes every table in full, so that parsing the result reproduces the
/// system exactly.
pub fn write_system(sys: &TensorSystem) -> String {
    let mut out = String::new();
    let l = |o: ObjectId| sys.label(o);
    out.push_str("[objects]\n");
    out.push_str(&sys.labels().join(" "));
    out.push('\n');
    let _ = writeln!(out, "\n[zero]\n{}\n\n[unit]\n{}\n\n[shift]", l(sys.zero()), l(sys.unit()));
    for a in sys.objects() {
        let _ = writeln!(out, "shift({}) = {}", l(a), l(sys.shift(a)));
    }
    out.push_str("\n[sum]\n");
    for a in sys.objects() {
        for b in sys.objects() {
            let _ = writeln!(out, "sum({}, {}) = {}", l(a), l(b), l(sys.sum(a, b)));
        }
    }
    out.push_str("\n[tensor]\n");
    for a in sys.objects() {
        for b in sys.objects() {
            let _ = writeln!(out, "tensor({}, {}) = {}", l(a), l(b), l(sys.tensor(a, b)));
        }
    }
    out.push_str("\n[triangles]\n");
    for &(a, b, c) in sys.triangles() {
        let _ = writeln!(out, "({}, {}, {})", l(a), l(b), l(c));
    }
    out.push_str("\n[summands]\n");
    for (s, t) in sys.summand_pairs() {
        let _ = writeln!(out, "summand({}, {})", l(s), l(t));
    }
    out.push_str("\n[options]\ncomplete_triangles = false\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ttgeom_core::tensys::{boolean_matrices, builtin, random_system, BUILTIN_NAMES};

    #[test]
    fn trivial_document() {
        let text = "[objects]\n0 u\n[zero]\n0\n[unit]\nu\n[options]\ncomplete_triangles = true\n";
        assert_eq!(parse_system(text).unwrap(), builtin("trivial").unwrap());
    }

    #[test]
    fn undeclared_object_is_located() {
        let text = "[objects]\n0 a b u\n[zero]\n0\n[unit]\nu\n[tensor]\ntensor(a, b) = c\n";
        let err = parse_system(text).unwrap_err();
        assert_eq!(err.message, "undeclared object c");
        assert_eq!((err.line, err.column), (8, 16));
    }

    #[test]
    fn non_total_tables_are_reported() {
        let text = "[objects]\n0 a b u\n[zero]\n0\n[unit]\nu\n[sum]\na <= b\nb <= u\n[tensor]\ntensor(a, a) = a\n";
        let err = parse_system(text).unwrap_err();
        assert!(err.message.starts_with("non-total tensor table"), "{err}");
        assert_eq!(err.line, 10);
        let text = "[objects]\n0 a u\n[zero]\n0\n[unit]\nu\n[shift]\nshift(a) = a\n";
        assert!(parse_system(text).unwrap_err().message.contains("missing shift(0)"));
    }

    #[test]
    fn syntax_errors_carry_columns() {
        let err = parse_system("[objects]\n0 u\n[zero]\n0\n[unit]\nu\n[tensor]\ntensor(u u) = u\n").unwrap_err();
        assert_eq!((err.line, err.column), (8, 10));
        let err = parse_system("0 u\n").unwrap_err();
        assert_eq!(err.line, 1);
        let err = parse_system("[things]\n").unwrap_err();
        assert!(err.message.contains("unknown section"));
    }

    #[test]
    fn written_systems_round_trip() {
        for name in BUILTIN_NAMES {
            let sys = builtin(name).unwrap();
            assert_eq!(parse_system(&write_system(&sys)).unwrap(), sys, "{name}");
        }
        let m = boolean_matrices();
        assert_eq!(parse_system(&write_system(&m)).unwrap(), m);
        for seed in 0..20 {
            let sys = random_system(seed, 8).unwrap();
            assert_eq!(parse_system(&write_system(&sys)).unwrap(), sys, "seed {seed}");
        }
    }

    #[test]
    fn zero_is_moved_first() {
        let text = "[objects]\nu z\n[zero]\nz\n[unit]\nu\n[options]\ncomplete_triangles = true\n";
        let sys = parse_system(text).unwrap();
        assert_eq!(sys.labels(), &["z".to_string(), "u".to_string()]);
    }
}
