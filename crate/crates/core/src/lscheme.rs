//! L-schemes: the sequence of tangencies, crossings and solitary nodes of a
//! real trigonal curve seen from the pencil of vertical lines, their
//! elementary rewrites and a crossing-monotone search for alternating form.

use std::collections::{HashSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SymbolKind {
    /// Vertical tangency opening to the right; one real point becomes three.
    Min,
    /// Vertical tangency opening to the left; three real points become one.
    Max,
    Crossing,
    Solitary,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SchemeSymbol {
    pub kind: SymbolKind,
    index: u8,
}

impl SchemeSymbol {
    pub fn new(kind: SymbolKind, index: u8) -> Result<Self> {
        if index != 1 && index != 2 {
            return Err(Error::Invalid(format!("symbol index must be 1 or 2, got {index}")));
        }
        Ok(SchemeSymbol { kind, index })
    }

    pub const fn min(j: u8) -> Self {
        SchemeSymbol { kind: SymbolKind::Min, index: j }
    }

    pub const fn max(j: u8) -> Self {
        SchemeSymbol { kind: SymbolKind::Max, index: j }
    }

    pub const fn cross(j: u8) -> Self {
        SchemeSymbol { kind: SymbolKind::Crossing, index: j }
    }

    pub const fn dot(j: u8) -> Self {
        SchemeSymbol { kind: SymbolKind::Solitary, index: j }
    }

    pub fn index(&self) -> u8 {
        self.index
    }

    /// Same kind, index swapped 1 <-> 2 (vertical reflection).
    pub fn flipped(&self) -> Self {
        SchemeSymbol { kind: self.kind, index: 3 - self.index }
    }

    pub fn token(&self) -> String {
        let c = match self.kind {
            SymbolKind::Min => '<',
            SymbolKind::Max => '>',
            SymbolKind::Crossing => 'x',
            SymbolKind::Solitary => 'o',
        };
        format!("{c}{}", self.index)
    }

    fn from_token(tok: &str) -> Option<Self> {
        let mut chars = tok.chars();
        let kind = match chars.next()? {
            '<' => SymbolKind::Min,
            '>' => SymbolKind::Max,
            'x' => SymbolKind::Crossing,
            'o' => SymbolKind::Solitary,
            _ => return None,
        };
        let index = match chars.as_str() {
            "1" => 1,
            "2" => 2,
            _ => return None,
        };
        Some(SchemeSymbol { kind, index })
    }
}

impl fmt::Display for SchemeSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.token())
    }
}

/// Behavior at infinity, encoded by the residue of the y-degree and the sign
/// of the leading coefficient of Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Terminal {
    Down,
    Up,
    Vee,
    Wedge,
}

impl Terminal {
    pub fn token(&self) -> &'static str {
        match self {
            Terminal::Down => "dn",
            Terminal::Up => "up",
            Terminal::Vee => "v",
            Terminal::Wedge => "^",
        }
    }

    fn from_token(tok: &str) -> Option<Self> {
        Some(match tok {
            "dn" => Terminal::Down,
            "up" => Terminal::Up,
            "v" => Terminal::Vee,
            "^" => Terminal::Wedge,
            _ => return None,
        })
    }

    /// `Down`/`Up` need b = 2 mod 3, `Vee`/`Wedge` need b = 1 mod 3.
    pub fn legal_for(&self, b: u32) -> bool {
        match self {
            Terminal::Down | Terminal::Up => b % 3 == 2,
            Terminal::Vee | Terminal::Wedge => b % 3 == 1,
        }
    }

    /// The two terminals legal for `b`, positive leading coefficient first.
    pub fn legal_pair(b: u32) -> Vec<Terminal> {
        match b % 3 {
            2 => vec![Terminal::Down, Terminal::Up],
            1 => vec![Terminal::Vee, Terminal::Wedge],
            _ => vec![],
        }
    }
}

/// Runs the real-branch counter over `body` and reports the first violation.
pub fn check_branch_count(body: &[SchemeSymbol]) -> Result<()> {
    let mut r = 1;
    for (position, s) in body.iter().enumerate() {
        r = match (s.kind, r) {
            (SymbolKind::Min, 1) => 3,
            (SymbolKind::Max, 3) => 1,
            (SymbolKind::Crossing, 3) => 3,
            (SymbolKind::Solitary, 1) => 1,
            _ => return Err(Error::BranchCountViolation { position }),
        };
    }
    if r != 1 {
        return Err(Error::BranchCountViolation { position: body.len() });
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct LScheme {
    body: Vec<SchemeSymbol>,
    terminal: Terminal,
}

impl LScheme {
    pub fn new(body: Vec<SchemeSymbol>, terminal: Terminal) -> Result<Self> {
        check_branch_count(&body)?;
        Ok(LScheme { body, terminal })
    }

    pub fn body(&self) -> &[SchemeSymbol] {
        &self.body
    }

    pub fn terminal(&self) -> Terminal {
        self.terminal
    }

    fn count(&self, kind: SymbolKind) -> usize {
        self.body.iter().filter(|s| s.kind == kind).count()
    }

    pub fn crossing_count(&self) -> usize {
        self.count(SymbolKind::Crossing)
    }

    pub fn solitary_count(&self) -> usize {
        self.count(SymbolKind::Solitary)
    }

    pub fn tangency_count(&self) -> usize {
        self.count(SymbolKind::Min) + self.count(SymbolKind::Max)
    }

    /// Reflection swapping the indices 1 and 2; the terminal is kept.
    pub fn flipped(&self) -> LScheme {
        LScheme {
            body: self.body.iter().map(|s| s.flipped()).collect(),
            terminal: self.terminal,
        }
    }

    pub fn render(&self) -> String {
        self.to_string()
    }

    pub fn body_string(&self) -> String {
        let toks: Vec<String> = self.body.iter().map(|s| s.token()).collect();
        toks.join(" ")
    }

    pub fn apply_rewrite(&self, rule: &RewriteRule) -> Result<LScheme> {
        let mismatch = || Error::PatternMismatch { position: rule.position };
        let (lhs, rhs) = rule.patterns().ok_or_else(mismatch)?;
        let p = rule.position;
        let end = p.checked_add(lhs.len()).ok_or_else(mismatch)?;
        if end > self.body.len() || self.body[p..end] != lhs[..] {
            return Err(mismatch());
        }
        let mut body = Vec::with_capacity(self.body.len() + rhs.len());
        body.extend_from_slice(&self.body[..p]);
        body.extend_from_slice(&rhs);
        body.extend_from_slice(&self.body[end..]);
        LScheme::new(body, self.terminal)
    }

    /// Every legal single rewrite except the crossing-pair insertion, ordered
    /// by position, then family, then direction.
    pub fn rewrite_neighbors(&self) -> Vec<(RewriteRule, LScheme)> {
        let mut out = Vec::new();
        for position in 0..self.body.len() {
            for family in RuleFamily::ALL {
                for direction in [Direction::Forward, Direction::Backward] {
                    if family == RuleFamily::Cancel && direction == Direction::Backward {
                        continue;
                    }
                    for index in [1, 2] {
                        let rule = RewriteRule {
                            family,
                            direction,
                            position,
                            index,
                        };
                        if let Ok(next) = self.apply_rewrite(&rule) {
                            out.push((rule, next));
                        }
                    }
                }
            }
        }
        out
    }

    /// Matches `(o)* <2 x1^m >2 (o)*` or `(o)* <2 x1^m x2^n >1 (o)*` with
    /// m, n >= 1, or the reflection of either.
    pub fn is_alternating(&self) -> bool {
        is_alternating_body(&self.body) || is_alternating_body(&self.flipped().body)
    }
}

fn is_alternating_body(body: &[SchemeSymbol]) -> bool {
    let core: Vec<SchemeSymbol> = body
        .iter()
        .copied()
        .skip_while(|s| s.kind == SymbolKind::Solitary)
        .collect();
    let tail = core.iter().rposition(|s| s.kind != SymbolKind::Solitary);
    let Some(tail) = tail else { return false };
    let core = &core[..=tail];
    if core.len() < 3 || core[0] != SchemeSymbol::min(2) {
        return false;
    }
    let last = core[core.len() - 1];
    let mid = &core[1..core.len() - 1];
    let m = mid.iter().take_while(|s| **s == SchemeSymbol::cross(1)).count();
    let n = mid[m..].iter().take_while(|s| **s == SchemeSymbol::cross(2)).count();
    if m == 0 || m + n != mid.len() {
        return false;
    }
    (n == 0 && last == SchemeSymbol::max(2)) || (n > 0 && last == SchemeSymbol::max(1))
}

impl fmt::Display for LScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.body {
            write!(f, "{s} ")?;
        }
        f.write_str(self.terminal.token())
    }
}

impl FromStr for LScheme {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let toks: Vec<&str> = text.split_whitespace().collect();
        let mut body = Vec::new();
        for (position, tok) in toks.iter().enumerate() {
            if let Some(s) = SchemeSymbol::from_token(tok) {
                body.push(s);
            } else if let Some(t) = Terminal::from_token(tok) {
                if position + 1 != toks.len() {
                    return Err(Error::UnknownToken {
                        token: toks[position + 1].to_string(),
                        position: position + 1,
                    });
                }
                return LScheme::new(body, t);
            } else {
                return Err(Error::UnknownToken {
                    token: tok.to_string(),
                    position,
                });
            }
        }
        Err(Error::MissingTerminal)
    }
}

pub fn parse_scheme(text: &str) -> Result<LScheme> {
    text.parse()
}

impl From<LScheme> for String {
    fn from(s: LScheme) -> Self {
        s.to_string()
    }
}

impl TryFrom<String> for LScheme {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// The six families of elementary operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RuleFamily {
    /// `x1 >2 <-> x2 >1`
    ExchangeMax,
    /// `<2 x1 <-> <1 x2`
    ExchangeMin,
    /// `xj xj <-> (empty)`
    Cancel,
    /// `xj >j <-> >j oj`
    MaxSolitary,
    /// `<j xj <-> oj <j`
    MinSolitary,
    /// `x2 x1 x2 <-> x1 x2 x1`
    BraidRelation,
}

impl RuleFamily {
    pub const ALL: [RuleFamily; 6] = [
        RuleFamily::ExchangeMax,
        RuleFamily::ExchangeMin,
        RuleFamily::Cancel,
        RuleFamily::MaxSolitary,
        RuleFamily::MinSolitary,
        RuleFamily::BraidRelation,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            RuleFamily::ExchangeMax => "exchange_max",
            RuleFamily::ExchangeMin => "exchange_min",
            RuleFamily::Cancel => "cancel",
            RuleFamily::MaxSolitary => "max_solitary",
            RuleFamily::MinSolitary => "min_solitary",
            RuleFamily::BraidRelation => "braid_relation",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        RuleFamily::ALL.into_iter().find(|f| f.name() == s)
    }

    /// Whether the family's patterns depend on a free index j.
    pub fn indexed(&self) -> bool {
        matches!(self, RuleFamily::Cancel | RuleFamily::MaxSolitary | RuleFamily::MinSolitary)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Direction {
    Forward,
    Backward,
}

/// A family, a direction and the body position where the left-hand side
/// starts. `index` selects j for the indexed families and is ignored by the
/// others (conventionally 1).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RewriteRule {
    pub family: RuleFamily,
    pub direction: Direction,
    pub position: usize,
    pub index: u8,
}

impl RewriteRule {
    pub fn new(family: RuleFamily, direction: Direction, position: usize) -> Self {
        RewriteRule {
            family,
            direction,
            position,
            index: 1,
        }
    }

    pub fn with_index(mut self, j: u8) -> Self {
        self.index = j;
        self
    }

    /// Left- and right-hand sides in the rule's direction.
    fn patterns(&self) -> Option<(Vec<SchemeSymbol>, Vec<SchemeSymbol>)> {
        use SchemeSymbol as S;
        let j = self.index;
        if self.family.indexed() && j != 1 && j != 2 {
            return None;
        }
        if !self.family.indexed() && j != 1 {
            return None;
        }
        let (fwd, bwd) = match self.family {
            RuleFamily::ExchangeMax => (vec![S::cross(1), S::max(2)], vec![S::cross(2), S::max(1)]),
            RuleFamily::ExchangeMin => (vec![S::min(2), S::cross(1)], vec![S::min(1), S::cross(2)]),
            RuleFamily::Cancel => (vec![S::cross(j), S::cross(j)], vec![]),
            RuleFamily::MaxSolitary => (vec![S::cross(j), S::max(j)], vec![S::max(j), S::dot(j)]),
            RuleFamily::MinSolitary => (vec![S::min(j), S::cross(j)], vec![S::dot(j), S::min(j)]),
            RuleFamily::BraidRelation => (
                vec![S::cross(2), S::cross(1), S::cross(2)],
                vec![S::cross(1), S::cross(2), S::cross(1)],
            ),
        };
        Some(match self.direction {
            Direction::Forward => (fwd, bwd),
            Direction::Backward => (bwd, fwd),
        })
    }

    /// Change in crossing count caused by this rule.
    pub fn crossing_delta(&self) -> i64 {
        let (lhs, rhs) = match self.patterns() {
            Some(p) => p,
            None => return 0,
        };
        let crossings =
            |v: &[SchemeSymbol]| v.iter().filter(|s| s.kind == SymbolKind::Crossing).count() as i64;
        crossings(&rhs) - crossings(&lhs)
    }
}

/// One step of a reduction path.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReductionStep {
    pub rule_id: RuleFamily,
    pub direction: Direction,
    pub position: usize,
    pub index: u8,
    pub scheme: LScheme,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ReductionPath {
    pub steps: Vec<ReductionStep>,
}

impl ReductionPath {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn last_scheme<'a>(&'a self, start: &'a LScheme) -> &'a LScheme {
        self.steps.last().map_or(start, |s| &s.scheme)
    }
}

/// Breadth-first search over crossing-monotone rewrites until an alternating
/// scheme is reached. At most `max_steps` schemes are expanded.
pub fn reduce_to_alternating(s: &LScheme, max_steps: usize) -> Result<ReductionPath> {
    if s.is_alternating() {
        return Ok(ReductionPath { steps: Vec::new() });
    }
    let mut seen: HashSet<String> = HashSet::from([s.render()]);
    let mut nodes: Vec<(Option<usize>, Option<ReductionStep>)> = vec![(None, None)];
    let mut schemes: Vec<LScheme> = vec![s.clone()];
    let mut queue = VecDeque::from([0usize]);
    let mut expanded = 0;
    while let Some(id) = queue.pop_front() {
        if expanded >= max_steps {
            return Err(Error::StepBudgetExceeded {
                expanded,
                frontier: queue.len() + 1,
            });
        }
        expanded += 1;
        let current = schemes[id].clone();
        for (rule, next) in current.rewrite_neighbors() {
            if rule.crossing_delta() > 0 || !seen.insert(next.render()) {
                continue;
            }
            let step = ReductionStep {
                rule_id: rule.family,
                direction: rule.direction,
                position: rule.position,
                index: rule.index,
                scheme: next.clone(),
            };
            let done = next.is_alternating();
            nodes.push((Some(id), Some(step)));
            schemes.push(next);
            let nid = nodes.len() - 1;
            if done {
                let mut steps = Vec::new();
                let mut cur = Some(nid);
                while let Some(c) = cur {
                    let (parent, step) = &nodes[c];
                    if let Some(step) = step {
                        steps.push(step.clone());
                    }
                    cur = *parent;
                }
                steps.reverse();
                return Ok(ReductionPath { steps });
            }
            queue.push_back(nid);
        }
    }
    Err(Error::StepBudgetExceeded {
        expanded,
        frontier: 0,
    })
}

/// All valid bodies of length at most `max_len` (each paired with `terminal`).
pub fn all_valid_schemes(max_len: usize, terminal: Terminal) -> Vec<LScheme> {
    const ALPHABET: [SchemeSymbol; 8] = [
        SchemeSymbol::min(1),
        SchemeSymbol::min(2),
        SchemeSymbol::max(1),
        SchemeSymbol::max(2),
        SchemeSymbol::cross(1),
        SchemeSymbol::cross(2),
        SchemeSymbol::dot(1),
        SchemeSymbol::dot(2),
    ];
    // Depth-first over prefixes, pruning on the branch counter.
    fn go(
        prefix: &mut Vec<SchemeSymbol>,
        r: u8,
        max_len: usize,
        terminal: Terminal,
        out: &mut Vec<LScheme>,
    ) {
        if r == 1 {
            out.push(LScheme {
                body: prefix.clone(),
                terminal,
            });
        }
        if prefix.len() == max_len {
            return;
        }
        for s in ALPHABET {
            let next = match (s.kind, r) {
                (SymbolKind::Min, 1) => 3,
                (SymbolKind::Max, 3) => 1,
                (SymbolKind::Crossing, 3) => 3,
                (SymbolKind::Solitary, 1) => 1,
                _ => continue,
            };
            prefix.push(s);
            go(prefix, next, max_len, terminal, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), 1, max_len, terminal, &mut out);
    out
}
