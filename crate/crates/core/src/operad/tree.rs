use std::fmt;

use super::OperadError;

/// Largest weight [`enumerate_basis`] accepts.
pub const MAX_WEIGHT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Op {
    /// `⊢`, rendered `|-`.
    Left,
    /// `⊣`, rendered `-|`.
    Right,
}

impl Op {
    pub fn ascii(self) -> &'static str {
        match self {
            Op::Left => "|-",
            Op::Right => "-|",
        }
    }
}

/// A complete binary tree whose internal nodes carry operation labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TreeMonomial {
    Leaf,
    Node(Op, Box<TreeMonomial>, Box<TreeMonomial>),
}

impl TreeMonomial {
    pub fn node(op: Op, l: TreeMonomial, r: TreeMonomial) -> Self {
        TreeMonomial::Node(op, Box::new(l), Box::new(r))
    }

    /// Number of internal nodes.
    pub fn weight(&self) -> usize {
        match self {
            TreeMonomial::Leaf => 0,
            TreeMonomial::Node(_, l, r) => 1 + l.weight() + r.weight(),
        }
    }

    pub fn leaves(&self) -> usize {
        self.weight() + 1
    }

    /// Labels in in-order traversal.
    pub fn labels(&self) -> Vec<Op> {
        let mut v = Vec::new();
        self.collect_labels(&mut v);
        v
    }

    fn collect_labels(&self, v: &mut Vec<Op>) {
        if let TreeMonomial::Node(op, l, r) = self {
            l.collect_labels(v);
            v.push(*op);
            r.collect_labels(v);
        }
    }

    /// Unlabeled shape, for grouping by association type.
    pub fn shape(&self) -> String {
        match self {
            TreeMonomial::Leaf => "-".into(),
            TreeMonomial::Node(_, l, r) => format!("({}{})", l.shape(), r.shape()),
        }
    }

    fn render(&self, next: &mut usize, out: &mut String, top: bool) {
        match self {
            TreeMonomial::Leaf => {
                *next += 1;
                out.push_str(&format!("x{next}"));
            }
            TreeMonomial::Node(op, l, r) => {
                if !top {
                    out.push('(');
                }
                l.render(next, out, false);
                out.push_str(op.ascii());
                r.render(next, out, false);
                if !top {
                    out.push(')');
                }
            }
        }
    }
}

impl fmt::Display for TreeMonomial {
    /// `(x1|-x2)-|x3` style; a bare leaf prints as `x1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut s = String::new();
        self.render(&mut 0, &mut s, true);
        f.write_str(&s)
    }
}

/// All labeled trees of weight `w`. Association types come first by size of
/// the left subtree (largest first, recursively); within a type the in-order
/// label sequence runs lexicographically with `⊢` before `⊣`.
pub fn enumerate_basis(w: usize) -> Result<Vec<TreeMonomial>, OperadError> {
    if w > MAX_WEIGHT {
        return Err(OperadError::WeightTooLarge(w));
    }
    let mut out = Vec::new();
    for shape in shapes(w) {
        let slots = shape.weight();
        for bits in 0..(1u32 << slots) {
            // leftmost label is the most significant bit
            let labels: Vec<Op> = (0..slots)
                .map(|k| if bits >> (slots - 1 - k) & 1 == 0 { Op::Left } else { Op::Right })
                .collect();
            out.push(relabel(&shape, &mut labels.into_iter()));
        }
    }
    Ok(out)
}

fn shapes(w: usize) -> Vec<TreeMonomial> {
    if w == 0 {
        return vec![TreeMonomial::Leaf];
    }
    let mut v = Vec::new();
    for left in (0..w).rev() {
        for l in shapes(left) {
            for r in shapes(w - 1 - left) {
                v.push(TreeMonomial::node(Op::Left, l.clone(), r));
            }
        }
    }
    v
}

fn relabel(t: &TreeMonomial, labels: &mut impl Iterator<Item = Op>) -> TreeMonomial {
    match t {
        TreeMonomial::Leaf => TreeMonomial::Leaf,
        TreeMonomial::Node(_, l, r) => {
            let l = relabel(l, labels);
            let op = labels.next().expect("one label per node");
            let r = relabel(r, labels);
            TreeMonomial::node(op, l, r)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weight_two_column_order() {
        let got: Vec<String> = enumerate_basis(2).unwrap().iter().map(|t| t.to_string()).collect();
        assert_eq!(
            got,
            [
                "(x1|-x2)|-x3",
                "(x1|-x2)-|x3",
                "(x1-|x2)|-x3",
                "(x1-|x2)-|x3",
                "x1|-(x2|-x3)",
                "x1|-(x2-|x3)",
                "x1-|(x2|-x3)",
                "x1-|(x2-|x3)",
            ]
        );
    }

    #[test]
    fn low_weights() {
        let w0 = enumerate_basis(0).unwrap();
        assert_eq!(w0, vec![TreeMonomial::Leaf]);
        assert_eq!(w0[0].to_string(), "x1");
        let w1: Vec<String> = enumerate_basis(1).unwrap().iter().map(|t| t.to_string()).collect();
        assert_eq!(w1, ["x1|-x2", "x1-|x2"]);
        assert!(enumerate_basis(MAX_WEIGHT + 1).is_err());
    }

    #[test]
    fn labels_and_leaves() {
        let t = &enumerate_basis(2).unwrap()[5];
        assert_eq!(t.labels(), vec![Op::Left, Op::Right]);
        assert_eq!(t.leaves(), 3);
        assert_eq!(t.shape(), "(-(--))");
    }
}
