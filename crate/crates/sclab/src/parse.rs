//! Parsers for group expressions and the two input file formats.
//!
//! Expression grammar (whitespace insignificant, family letters ASCII
//! case-insensitive, `x` and the times sign both accepted):
//!
//! ```text
//! expr   := term (('x' | '×') term)*          left-associative
//! term   := family | '(' expr ')'
//! family := ('Z' | 'C') int | 'D' int | 'S' int | 'A' int | 'Q8' | 'Dic' int
//! ```
//!
//! Cayley table files are UTF-8 text: `#` comment lines, a line
//! `order <n>`, an optional line `names <n tokens>`, then `n` rows of `n`
//! whitespace-separated 0-based indices. Permutation generator files hold
//! one generator per line in cycle notation over 1-based points, `()` for
//! the identity.

use thiserror::Error;

use crate::error::GroupError;
use crate::families::{direct_product, Family};
use crate::group::Group;
use crate::perm::Perm;

/// Abstract syntax of a group expression.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupExpr {
    Family(Family),
    Product(Box<GroupExpr>, Box<GroupExpr>),
}

impl GroupExpr {
    /// Order of the denoted group, or `None` on overflow.
    pub fn order(&self) -> Option<usize> {
        match self {
            GroupExpr::Family(f) => f.order(),
            GroupExpr::Product(a, b) => a.order()?.checked_mul(b.order()?),
        }
    }

    /// Builds the group, enforcing the order cap.
    pub fn build(&self, order_cap: usize) -> Result<Group, GroupError> {
        match self {
            GroupExpr::Family(f) => f.build(order_cap),
            GroupExpr::Product(a, b) => {
                let left = a.build(order_cap)?;
                let right = b.build(order_cap)?;
                direct_product(&left, &right, order_cap)
            }
        }
    }
}

impl std::fmt::Display for GroupExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            GroupExpr::Family(fam) => write!(f, "{}", fam.name()),
            GroupExpr::Product(a, b) => {
                write!(f, "{} x ", a)?;
                if matches!(**b, GroupExpr::Product(..)) {
                    write!(f, "({})", b)
                } else {
                    write!(f, "{}", b)
                }
            }
        }
    }
}

/// A parse failure with its byte offset and what was expected there.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ExprParseError {
    pub offset: usize,
    pub message: String,
    pub expected: Vec<&'static str>,
}

/// Parses a group expression into its AST.
pub fn parse_group_expr(text: &str) -> Result<GroupExpr, ExprParseError> {
    let mut p = ExprParser {
        bytes: text.as_bytes(),
        pos: 0,
    };
    let expr = p.expr()?;
    p.skip_ws();
    if p.pos != p.bytes.len() {
        return Err(p.error("unexpected trailing input", vec!["'x'", "end of input"]));
    }
    Ok(expr)
}

struct ExprParser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> ExprParser<'a> {
    fn error(&self, message: &str, expected: Vec<&'static str>) -> ExprParseError {
        ExprParseError {
            offset: self.pos,
            message: message.to_string(),
            expected,
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    /// Consumes a product operator: ASCII `x` or the multiplication sign.
    fn eat_times(&mut self) -> bool {
        self.skip_ws();
        match self.peek() {
            Some(b'x') | Some(b'X') => {
                self.pos += 1;
                true
            }
            // '×' is 0xC3 0x97 in UTF-8
            Some(0xC3) if self.bytes.get(self.pos + 1) == Some(&0x97) => {
                self.pos += 2;
                true
            }
            _ => false,
        }
    }

    fn expr(&mut self) -> Result<GroupExpr, ExprParseError> {
        let mut acc = self.term()?;
        while self.eat_times() {
            let rhs = self.term()?;
            acc = GroupExpr::Product(Box::new(acc), Box::new(rhs));
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<GroupExpr, ExprParseError> {
        self.skip_ws();
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                self.skip_ws();
                if self.peek() == Some(b')') {
                    self.pos += 1;
                    Ok(inner)
                } else {
                    Err(self.error("unclosed parenthesis", vec!["')'"]))
                }
            }
            Some(c) if c.is_ascii_alphabetic() => self.family(),
            _ => Err(self.error(
                "expected a family or parenthesized expression",
                vec!["'Z'", "'C'", "'D'", "'S'", "'A'", "'Q8'", "'Dic'", "'('"],
            )),
        }
    }

    fn family(&mut self) -> Result<GroupExpr, ExprParseError> {
        let start = self.pos;
        let mut letters = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_alphabetic() {
                letters.push(c.to_ascii_lowercase() as char);
                self.pos += 1;
            } else {
                break;
            }
        }
        let digits_start = self.pos;
        let mut number: Option<usize> = None;
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                let d = (c - b'0') as usize;
                number = Some(match number.unwrap_or(0).checked_mul(10).and_then(|v| v.checked_add(d)) {
                    Some(v) => v,
                    None => {
                        return Err(self.error("parameter too large", vec!["a smaller integer"]))
                    }
                });
                self.pos += 1;
            } else {
                break;
            }
        }
        let require_param = |p: &Self, number: Option<usize>| {
            number.ok_or_else(|| ExprParseError {
                offset: digits_start.max(p.pos),
                message: "family parameter expected".to_string(),
                expected: vec!["an integer"],
            })
        };
        let family = match letters.as_str() {
            "z" | "c" => {
                let n = require_param(self, number)?;
                if n < 1 {
                    return Err(self.bounds_error(start, "cyclic parameter must be at least 1"));
                }
                Family::Cyclic(n)
            }
            "d" => {
                let n = require_param(self, number)?;
                if n < 1 {
                    return Err(self.bounds_error(start, "dihedral parameter must be at least 1"));
                }
                Family::Dihedral(n)
            }
            "s" => {
                let n = require_param(self, number)?;
                if !(1..=7).contains(&n) {
                    return Err(self.bounds_error(start, "symmetric parameter must lie in 1..=7"));
                }
                Family::Symmetric(n)
            }
            "a" => {
                let n = require_param(self, number)?;
                if !(1..=7).contains(&n) {
                    return Err(self.bounds_error(start, "alternating parameter must lie in 1..=7"));
                }
                Family::Alternating(n)
            }
            "q" => {
                if number != Some(8) {
                    return Err(self.bounds_error(start, "the only quaternion family is Q8"));
                }
                Family::Quaternion
            }
            "dic" => {
                let m = require_param(self, number)?;
                if m < 2 {
                    return Err(self.bounds_error(start, "dicyclic parameter must be at least 2"));
                }
                Family::Dicyclic(m)
            }
            "" => {
                return Err(self.error(
                    "expected a family name",
                    vec!["'Z'", "'C'", "'D'", "'S'", "'A'", "'Q8'", "'Dic'"],
                ))
            }
            other => {
                return Err(ExprParseError {
                    offset: start,
                    message: format!("unknown family {other:?}"),
                    expected: vec!["'Z'", "'C'", "'D'", "'S'", "'A'", "'Q8'", "'Dic'"],
                })
            }
        };
        Ok(GroupExpr::Family(family))
    }

    fn bounds_error(&self, offset: usize, message: &str) -> ExprParseError {
        ExprParseError {
            offset,
            message: message.to_string(),
            expected: vec![],
        }
    }
}

/// A file parse failure with a 1-based line number.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FileParseError {
    #[error("line {line}: {message}")]
    Malformed { line: usize, message: String },
    #[error("line {line}: {source}")]
    Group {
        line: usize,
        #[source]
        source: GroupError,
    },
}

/// Parses a Cayley table file into a validated group. Names default to
/// `g0..g{n-1}` when the `names` line is absent.
pub fn parse_cayley_file(text: &str) -> Result<Group, FileParseError> {
    let mut order: Option<usize> = None;
    let mut names: Option<Vec<String>> = None;
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut header_line = 0;
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if order.is_none() {
            let rest = line.strip_prefix("order").ok_or_else(|| FileParseError::Malformed {
                line: line_no,
                message: "expected `order <n>`".to_string(),
            })?;
            let n: usize = rest.trim().parse().map_err(|_| FileParseError::Malformed {
                line: line_no,
                message: format!("invalid order {:?}", rest.trim()),
            })?;
            if n == 0 {
                return Err(FileParseError::Malformed {
                    line: line_no,
                    message: "order must be positive".to_string(),
                });
            }
            order = Some(n);
            header_line = line_no;
            continue;
        }
        let n = order.unwrap();
        if rows.is_empty() && names.is_none() {
            if let Some(rest) = line.strip_prefix("names") {
                let tokens: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if tokens.len() != n {
                    return Err(FileParseError::Malformed {
                        line: line_no,
                        message: format!("expected {n} names, got {}", tokens.len()),
                    });
                }
                names = Some(tokens);
                continue;
            }
        }
        if rows.len() == n {
            return Err(FileParseError::Malformed {
                line: line_no,
                message: format!("more than {n} table rows"),
            });
        }
        let mut row = Vec::with_capacity(n);
        for tok in line.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| FileParseError::Malformed {
                line: line_no,
                message: format!("invalid table entry {tok:?}"),
            })?;
            row.push(v);
        }
        if row.len() != n {
            return Err(FileParseError::Malformed {
                line: line_no,
                message: format!("expected {n} entries in the row, got {}", row.len()),
            });
        }
        rows.push(row);
    }
    let n = order.ok_or(FileParseError::Malformed {
        line: 1,
        message: "missing `order <n>` line".to_string(),
    })?;
    if rows.len() != n {
        return Err(FileParseError::Malformed {
            line: header_line,
            message: format!("expected {n} table rows, found {}", rows.len()),
        });
    }
    Group::from_table(&rows, names).map_err(|source| FileParseError::Group {
        line: header_line,
        source,
    })
}

/// Parses one cycle-notation line, e.g. `(1 2)(3 4)`, into 0-based cycles.
fn parse_cycles_line(line: &str, line_no: usize) -> Result<Vec<Vec<usize>>, FileParseError> {
    let malformed = |message: String| FileParseError::Malformed { line: line_no, message };
    let mut cycles = Vec::new();
    let mut chars = line.char_indices().peekable();
    while let Some(&(_, c)) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
            continue;
        }
        if c != '(' {
            return Err(malformed(format!("expected '(' but found {c:?}")));
        }
        chars.next();
        let mut cycle = Vec::new();
        let mut current = String::new();
        loop {
            match chars.next() {
                Some((_, ')')) => {
                    if !current.is_empty() {
                        cycle.push(parse_point(&current, line_no)?);
                    }
                    break;
                }
                Some((_, ch)) if ch.is_whitespace() => {
                    if !current.is_empty() {
                        cycle.push(parse_point(&current, line_no)?);
                        current.clear();
                    }
                }
                Some((_, ch)) if ch.is_ascii_digit() => current.push(ch),
                Some((_, ch)) => {
                    return Err(malformed(format!("unexpected character {ch:?} inside a cycle")))
                }
                None => return Err(malformed("unclosed cycle".to_string())),
            }
        }
        if cycle.len() == 1 {
            return Err(malformed("a cycle needs at least two points".to_string()));
        }
        cycles.push(cycle);
    }
    Ok(cycles)
}

fn parse_point(tok: &str, line_no: usize) -> Result<usize, FileParseError> {
    let p: usize = tok.parse().map_err(|_| FileParseError::Malformed {
        line: line_no,
        message: format!("invalid point {tok:?}"),
    })?;
    if p == 0 {
        return Err(FileParseError::Malformed {
            line: line_no,
            message: "points are 1-based; 0 is not a point".to_string(),
        });
    }
    Ok(p - 1)
}

/// Parses a permutation-generator file and closes the generators into a
/// group. An empty file yields the trivial group.
pub fn parse_perm_gens(text: &str) -> Result<Group, FileParseError> {
    parse_perm_gens_capped(text, crate::budget::DEFAULT_ORDER_CAP)
}

/// As [`parse_perm_gens`] with an explicit closure cap.
pub fn parse_perm_gens_capped(text: &str, order_cap: usize) -> Result<Group, FileParseError> {
    let mut parsed: Vec<(usize, Vec<Vec<usize>>)> = Vec::new();
    for (idx, raw_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw_line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let cycles = parse_cycles_line(line, line_no)?;
        parsed.push((line_no, cycles));
    }
    let degree = parsed
        .iter()
        .flat_map(|(_, cycles)| cycles.iter().flatten())
        .map(|&p| p + 1)
        .max()
        .unwrap_or(1);
    let mut gens = Vec::new();
    for (line_no, cycles) in &parsed {
        let perm = Perm::from_cycles(degree, cycles).ok_or_else(|| FileParseError::Malformed {
            line: *line_no,
            message: "a point repeats within the generator".to_string(),
        })?;
        gens.push(perm);
    }
    from_permutation_generators(&gens, order_cap).map_err(|source| FileParseError::Group {
        line: parsed.first().map(|(l, _)| *l).unwrap_or(1),
        source,
    })
}

/// Closes a set of permutations under composition, breadth-first from the
/// identity, and builds the resulting group. Element names are cycle
/// notation; the identity is named `()` and sits at index 0.
pub fn from_permutation_generators(gens: &[Perm], order_cap: usize) -> Result<Group, GroupError> {
    let degree = gens.iter().map(Perm::degree).max().unwrap_or(1);
    debug_assert!(gens.iter().all(|p| p.degree() == degree));
    let cap = order_cap.min(crate::budget::HARD_ORDER_CEILING);
    let mut elements: Vec<Perm> = vec![Perm::identity(degree)];
    let mut index: std::collections::HashMap<Perm, usize> = std::collections::HashMap::new();
    index.insert(elements[0].clone(), 0);
    let mut queue = std::collections::VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for gen in gens {
            let next = elements[i].compose(gen);
            if !index.contains_key(&next) {
                if elements.len() >= cap {
                    return Err(GroupError::OrderCapExceeded {
                        order: elements.len() + 1,
                        cap,
                    });
                }
                index.insert(next.clone(), elements.len());
                elements.push(next);
                queue.push_back(elements.len() - 1);
            }
        }
    }
    let n = elements.len();
    let mut table = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = index[&elements[i].compose(&elements[j])] as u16;
        }
    }
    let names = elements.iter().map(Perm::cycle_notation).collect();
    Group::from_flat(n, table, names)
}
