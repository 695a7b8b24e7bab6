use std::fmt;
use std::str::FromStr;

use crate::dyck::{Step, WeightedDyckPath};
use crate::error::{Error, ParseError, Result};
use crate::perm::Permutation;

/// A binary search tree labeled by `{1..n}`: every label in a left
/// subtree is smaller than its node, every label in a right subtree
/// greater.
///
/// Two permutations share a co-sylvester class exactly when this tree,
/// built by [`bst_from_perm`], is the same.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BinarySearchTree {
    root: Option<Box<Node>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Node {
    label: usize,
    left: Option<Box<Node>>,
    right: Option<Box<Node>>,
}

impl BinarySearchTree {
    pub fn size(&self) -> usize {
        fn count(node: &Option<Box<Node>>) -> usize {
            node.as_ref()
                .map_or(0, |n| 1 + count(&n.left) + count(&n.right))
        }
        count(&self.root)
    }

    pub fn root_label(&self) -> Option<usize> {
        self.root.as_ref().map(|n| n.label)
    }

    fn validate(&self) -> Result<()> {
        fn walk(
            node: &Option<Box<Node>>,
            lo: usize,
            hi: usize,
            seen: &mut Vec<bool>,
        ) -> Result<()> {
            let Some(n) = node else { return Ok(()) };
            if n.label < lo || n.label > hi {
                return Err(Error::invalid(
                    "binary search tree",
                    format!("label {} violates the search-tree ordering", n.label),
                ));
            }
            if n.label > seen.len() {
                return Err(Error::invalid(
                    "binary search tree",
                    format!("label {} exceeds the node count", n.label),
                ));
            }
            if seen[n.label - 1] {
                return Err(Error::invalid(
                    "binary search tree",
                    format!("label {} repeated", n.label),
                ));
            }
            seen[n.label - 1] = true;
            walk(&n.left, lo, n.label - 1, seen)?;
            walk(&n.right, n.label + 1, hi, seen)
        }
        let n = self.size();
        let mut seen = vec![false; n];
        walk(&self.root, 1, n, &mut seen)?;
        // n nodes, labels within 1..n, no repeats: labels are exactly 1..n
        Ok(())
    }
}

/// Builds the binary search tree of a permutation: the root of an
/// interval of values is the first of them to appear in the word, and
/// the values below and above it recurse.
pub fn bst_from_perm(sigma: &Permutation) -> BinarySearchTree {
    fn build(pos: &[usize], lo: usize, hi: usize) -> Option<Box<Node>> {
        if lo > hi || hi == 0 {
            return None;
        }
        let label = (lo..=hi).min_by_key(|&v| pos[v - 1]).unwrap();
        Some(Box::new(Node {
            label,
            left: build(pos, lo, label - 1),
            right: build(pos, label + 1, hi),
        }))
    }
    let pos = sigma.positions();
    BinarySearchTree {
        root: build(&pos, 1, sigma.size()),
    }
}

/// Which step sequence [`bst_from_wdp`] reads.
///
/// `Direct` reads the path as is and matches the Françon-Viennot image
/// of a permutation. `Shifted` first drops the leading step and
/// appends a Down step (the sequence need not remain a Dyck path) and
/// matches the type-0 image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BstMode {
    Direct,
    Shifted,
}

/// Builds the binary search tree of a weighted Dyck path.
///
/// Within an interval of indices, among those of minimal weight the
/// root is the smallest one whose even step is Down; if there is none,
/// the largest index of minimal weight.
pub fn bst_from_wdp(x: &WeightedDyckPath, mode: BstMode) -> BinarySearchTree {
    let n = x.size();
    let steps = x.path().steps();
    // even_down[i-1]: whether step 2i of the (possibly shifted) sequence is Down
    let even_down: Vec<bool> = (1..=n)
        .map(|i| match mode {
            BstMode::Direct => steps[2 * i - 1] == Step::Down,
            BstMode::Shifted => {
                if 2 * i < 2 * n {
                    steps[2 * i] == Step::Down
                } else {
                    true // the appended Down step
                }
            }
        })
        .collect();

    fn build(w: &[usize], even_down: &[bool], lo: usize, hi: usize) -> Option<Box<Node>> {
        if lo > hi || hi == 0 {
            return None;
        }
        let min_weight = (lo..=hi).map(|i| w[i - 1]).min().unwrap();
        let label = (lo..=hi)
            .find(|&i| w[i - 1] == min_weight && even_down[i - 1])
            .unwrap_or_else(|| {
                (lo..=hi)
                    .rev()
                    .find(|&i| w[i - 1] == min_weight)
                    .unwrap()
            });
        Some(Box::new(Node {
            label,
            left: build(w, even_down, lo, label - 1),
            right: build(w, even_down, label + 1, hi),
        }))
    }

    BinarySearchTree {
        root: build(x.weight(), &even_down, 1, n),
    }
}

/// Whether two permutations of the same size share a co-sylvester
/// class, i.e. have equal binary search trees.
pub fn same_cosylvester(sigma: &Permutation, tau: &Permutation) -> Result<bool> {
    if sigma.size() != tau.size() {
        return Err(Error::invalid(
            "permutation pair",
            format!("sizes {} and {} differ", sigma.size(), tau.size()),
        ));
    }
    Ok(bst_from_perm(sigma) == bst_from_perm(tau))
}

impl fmt::Display for BinarySearchTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write_node(node: &Node, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{}", node.label)?;
            if node.left.is_some() || node.right.is_some() {
                write!(f, "(")?;
                if let Some(l) = &node.left {
                    write_node(l, f)?;
                }
                write!(f, ",")?;
                if let Some(r) = &node.right {
                    write_node(r, f)?;
                }
                write!(f, ")")?;
            }
            Ok(())
        }
        match &self.root {
            Some(root) => write_node(root, f),
            None => Ok(()),
        }
    }
}

impl FromStr for BinarySearchTree {
    type Err = ParseError;

    fn from_str(s: &str) -> std::result::Result<Self, ParseError> {
        struct Parser<'a> {
            bytes: &'a [u8],
            pos: usize,
        }
        impl Parser<'_> {
            fn peek(&self) -> Option<u8> {
                self.bytes.get(self.pos).copied()
            }
            fn parse_node(&mut self) -> std::result::Result<Box<Node>, ParseError> {
                let start = self.pos;
                while self.peek().is_some_and(|b| b.is_ascii_digit()) {
                    self.pos += 1;
                }
                if self.pos == start {
                    return Err(ParseError::new(self.pos + 1, "expected a node label"));
                }
                let label: usize = std::str::from_utf8(&self.bytes[start..self.pos])
                    .unwrap()
                    .parse()
                    .map_err(|_| ParseError::new(start + 1, "label out of range"))?;
                let mut node = Node {
                    label,
                    left: None,
                    right: None,
                };
                if self.peek() == Some(b'(') {
                    self.pos += 1;
                    if self.peek() != Some(b',') {
                        node.left = Some(self.parse_node()?);
                    }
                    if self.peek() != Some(b',') {
                        return Err(ParseError::new(self.pos + 1, "expected ','"));
                    }
                    self.pos += 1;
                    if self.peek() != Some(b')') {
                        node.right = Some(self.parse_node()?);
                    }
                    if self.peek() != Some(b')') {
                        return Err(ParseError::new(self.pos + 1, "expected ')'"));
                    }
                    self.pos += 1;
                }
                Ok(Box::new(node))
            }
        }

        let t = s.trim();
        if t.is_empty() {
            return Ok(BinarySearchTree { root: None });
        }
        let mut parser = Parser {
            bytes: t.as_bytes(),
            pos: 0,
        };
        let root = parser.parse_node()?;
        if parser.pos != parser.bytes.len() {
            return Err(ParseError::new(
                parser.pos + 1,
                "trailing input after the tree",
            ));
        }
        let tree = BinarySearchTree { root: Some(root) };
        tree.validate()
            .map_err(|e| ParseError::new(1, e.to_string()))?;
        Ok(tree)
    }
}
