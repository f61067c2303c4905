use std::cmp::Ordering;
use std::collections::hash_map::DefaultHasher;
use std::collections::HashMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::score::Score;
use crate::solver::FinalScores;

struct Node<S> {
    score: S,
    left: Vec<GameTree<S>>,
    right: Vec<GameTree<S>>,
    digest: u64,
}

/// An explicit scoring game `{left options | score | right options}`.
///
/// Option sets are kept sorted and deduplicated, so `==` is identity of game
/// trees with options compared as sets. Subtrees are shared through `Arc`;
/// clones are cheap.
pub struct GameTree<S>(Arc<Node<S>>);

impl<S> Clone for GameTree<S> {
    fn clone(&self) -> Self {
        GameTree(Arc::clone(&self.0))
    }
}

fn option_set<S: Score, I: IntoIterator<Item = GameTree<S>>>(options: I) -> Vec<GameTree<S>> {
    let mut v: Vec<GameTree<S>> = options.into_iter().collect();
    v.sort();
    v.dedup();
    v
}

impl<S: Score> GameTree<S> {
    pub fn new<L, R>(score: S, left: L, right: R) -> Self
    where
        L: IntoIterator<Item = GameTree<S>>,
        R: IntoIterator<Item = GameTree<S>>,
    {
        let left = option_set(left);
        let right = option_set(right);
        let mut hasher = DefaultHasher::new();
        score.hash(&mut hasher);
        left.len().hash(&mut hasher);
        for t in &left {
            t.0.digest.hash(&mut hasher);
        }
        right.len().hash(&mut hasher);
        for t in &right {
            t.0.digest.hash(&mut hasher);
        }
        GameTree(Arc::new(Node {
            score,
            left,
            right,
            digest: hasher.finish(),
        }))
    }

    /// `{.|score|.}`, written as the bare score.
    pub fn leaf(score: S) -> Self {
        GameTree::new(score, [], [])
    }

    pub fn score(&self) -> &S {
        &self.0.score
    }

    pub fn left_options(&self) -> &[GameTree<S>] {
        &self.0.left
    }

    pub fn right_options(&self) -> &[GameTree<S>] {
        &self.0.right
    }

    pub fn is_leaf(&self) -> bool {
        self.0.left.is_empty() && self.0.right.is_empty()
    }

    pub(crate) fn id(&self) -> usize {
        Arc::as_ptr(&self.0) as usize
    }

    /// Number of distinct (shared) nodes.
    pub fn distinct_nodes(&self) -> usize {
        fn walk<S: Score>(t: &GameTree<S>, seen: &mut std::collections::HashSet<usize>) {
            if seen.insert(t.id()) {
                for c in t.left_options().iter().chain(t.right_options()) {
                    walk(c, seen);
                }
            }
        }
        let mut seen = std::collections::HashSet::new();
        walk(self, &mut seen);
        seen.len()
    }

    /// Longest play sequence (alternation not required).
    pub fn depth(&self) -> usize {
        self.left_options()
            .iter()
            .chain(self.right_options())
            .map(|c| c.depth() + 1)
            .max()
            .unwrap_or(0)
    }

    /// The same tree with every score shifted by `d`.
    pub fn shift(&self, d: &S) -> Self {
        let mut memo = HashMap::new();
        shift_memo(self, d, &mut memo)
    }
}

fn shift_memo<S: Score>(
    t: &GameTree<S>,
    d: &S,
    memo: &mut HashMap<usize, GameTree<S>>,
) -> GameTree<S> {
    if let Some(done) = memo.get(&t.id()) {
        return done.clone();
    }
    let left: Vec<_> = t
        .left_options()
        .iter()
        .map(|c| shift_memo(c, d, memo))
        .collect();
    let right: Vec<_> = t
        .right_options()
        .iter()
        .map(|c| shift_memo(c, d, memo))
        .collect();
    let out = GameTree::new(t.score().clone() + d.clone(), left, right);
    memo.insert(t.id(), out.clone());
    out
}

impl<S: Score> PartialEq for GameTree<S> {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.digest == other.0.digest
                && self.0.score == other.0.score
                && self.0.left == other.0.left
                && self.0.right == other.0.right)
    }
}

impl<S: Score> Eq for GameTree<S> {}

impl<S: Score> Ord for GameTree<S> {
    fn cmp(&self, other: &Self) -> Ordering {
        if Arc::ptr_eq(&self.0, &other.0) {
            return Ordering::Equal;
        }
        self.0
            .score
            .cmp(&other.0.score)
            .then_with(|| self.0.left.cmp(&other.0.left))
            .then_with(|| self.0.right.cmp(&other.0.right))
    }
}

impl<S: Score> PartialOrd for GameTree<S> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<S: Score> Hash for GameTree<S> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.digest.hash(state);
    }
}

impl<S: Score> fmt::Debug for GameTree<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GameTree({self})")
    }
}

/// Bracket form: `{3|4|2}`, options comma-separated, `.` for an empty set.
impl<S: Score> fmt::Display for GameTree<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_leaf() {
            return write!(f, "{}", self.score());
        }
        let side = |f: &mut fmt::Formatter<'_>, options: &[GameTree<S>]| -> fmt::Result {
            if options.is_empty() {
                return f.write_str(".");
            }
            for (i, o) in options.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{o}")?;
            }
            Ok(())
        };
        f.write_str("{")?;
        side(f, self.left_options())?;
        write!(f, "|{}|", self.score())?;
        side(f, self.right_options())?;
        f.write_str("}")
    }
}

struct TreeParser<'t> {
    text: &'t str,
    pos: usize,
}

impl TreeParser<'_> {
    fn err(&self, message: &str) -> Error {
        Error::Syntax {
            line: 1,
            message: format!("{message} at offset {}", self.pos),
        }
    }

    fn skip_ws(&mut self) {
        while self.text[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.text[self.pos..]
                .chars()
                .next()
                .map_or(1, char::len_utf8);
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, c: char) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.err(&format!("expected `{c}`")))
        }
    }

    fn score<S: Score>(&mut self) -> Result<S> {
        self.skip_ws();
        let start = self.pos;
        let rest = &self.text[start..];
        let len = rest
            .find(|c: char| c.is_whitespace() || "{}|,".contains(c))
            .unwrap_or(rest.len());
        self.pos += len;
        rest[..len].parse().map_err(|_| Error::Syntax {
            line: 1,
            message: format!("bad score `{}` at offset {start}", &rest[..len]),
        })
    }

    fn options<S: Score>(&mut self) -> Result<Vec<GameTree<S>>> {
        if self.peek() == Some('.') {
            self.pos += 1;
            return Ok(Vec::new());
        }
        let mut out = vec![self.tree()?];
        while self.peek() == Some(',') {
            self.pos += 1;
            out.push(self.tree()?);
        }
        Ok(out)
    }

    fn tree<S: Score>(&mut self) -> Result<GameTree<S>> {
        if self.peek() != Some('{') {
            return Ok(GameTree::leaf(self.score()?));
        }
        self.pos += 1;
        let left = self.options()?;
        self.expect('|')?;
        let score = self.score()?;
        self.expect('|')?;
        let right = self.options()?;
        self.expect('}')?;
        Ok(GameTree::new(score, left, right))
    }
}

/// Parses the bracket form produced by `Display`.
pub fn parse_tree<S: Score>(text: &str) -> Result<GameTree<S>> {
    let mut p = TreeParser { text, pos: 0 };
    let tree = p.tree()?;
    if p.peek().is_some() {
        return Err(p.err("trailing input"));
    }
    Ok(tree)
}

/// `-G`: option sets swapped, every score negated.
pub fn negate_tree<S: Score>(g: &GameTree<S>) -> GameTree<S> {
    fn go<S: Score>(t: &GameTree<S>, memo: &mut HashMap<usize, GameTree<S>>) -> GameTree<S> {
        if let Some(done) = memo.get(&t.id()) {
            return done.clone();
        }
        let left: Vec<_> = t.right_options().iter().map(|c| go(c, memo)).collect();
        let right: Vec<_> = t.left_options().iter().map(|c| go(c, memo)).collect();
        let out = GameTree::new(-t.score().clone(), left, right);
        memo.insert(t.id(), out.clone());
        out
    }
    go(g, &mut HashMap::new())
}

/// Disjunctive sum: a move in either component, scores added.
pub fn sum_trees<S: Score>(g: &GameTree<S>, h: &GameTree<S>) -> GameTree<S> {
    fn go<S: Score>(
        g: &GameTree<S>,
        h: &GameTree<S>,
        memo: &mut HashMap<(usize, usize), GameTree<S>>,
    ) -> GameTree<S> {
        if let Some(done) = memo.get(&(g.id(), h.id())) {
            return done.clone();
        }
        let mut left = Vec::with_capacity(g.left_options().len() + h.left_options().len());
        for gl in g.left_options() {
            left.push(go(gl, h, memo));
        }
        for hl in h.left_options() {
            left.push(go(g, hl, memo));
        }
        let mut right = Vec::with_capacity(g.right_options().len() + h.right_options().len());
        for gr in g.right_options() {
            right.push(go(gr, h, memo));
        }
        for hr in h.right_options() {
            right.push(go(g, hr, memo));
        }
        let out = GameTree::new(g.score().clone() + h.score().clone(), left, right);
        memo.insert((g.id(), h.id()), out.clone());
        out
    }
    go(g, h, &mut HashMap::new())
}

/// Identity of game trees, option sets compared as sets.
pub fn tree_identical<S: Score>(g: &GameTree<S>, h: &GameTree<S>) -> bool {
    g == h
}

/// Left final score: the root score if Left has no option, else the best
/// Right final score among Left's options. Right final score dually.
pub fn tree_final_scores<S: Score>(g: &GameTree<S>) -> FinalScores<S> {
    fn go<S: Score>(t: &GameTree<S>, memo: &mut HashMap<usize, FinalScores<S>>) -> FinalScores<S> {
        if let Some(done) = memo.get(&t.id()) {
            return done.clone();
        }
        let s_left = t
            .left_options()
            .iter()
            .map(|o| go(o, memo).s_right)
            .max()
            .unwrap_or_else(|| t.score().clone());
        let s_right = t
            .right_options()
            .iter()
            .map(|o| go(o, memo).s_left)
            .min()
            .unwrap_or_else(|| t.score().clone());
        let out = FinalScores { s_left, s_right };
        memo.insert(t.id(), out.clone());
        out
    }
    go(g, &mut HashMap::new())
}
