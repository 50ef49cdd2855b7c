//! Paths stored as edge sequences in splay trees with lazy reversal.
//!
//! Every colored edge owns one node. The in-order sequence of a tree is the
//! list of edges along one monochromatic path, so two edges lie on the same
//! path exactly when their nodes share a tree.

const NIL: u32 = u32::MAX;

#[derive(Clone, Copy)]
struct Node {
    parent: u32,
    left: u32,
    right: u32,
    flip: bool,
}

impl Node {
    const EMPTY: Node = Node {
        parent: NIL,
        left: NIL,
        right: NIL,
        flip: false,
    };
}

/// Handle of an edge node inside a [`PathForest`].
pub(crate) type NodeId = u32;

#[derive(Default)]
pub(crate) struct PathForest {
    nodes: Vec<Node>,
    spare: Vec<NodeId>,
    stack: Vec<NodeId>,
}

impl PathForest {
    pub(crate) fn new() -> Self {
        Self::default()
    }

    fn alloc(&mut self) -> NodeId {
        match self.spare.pop() {
            Some(id) => {
                self.nodes[id as usize] = Node::EMPTY;
                id
            }
            None => {
                self.nodes.push(Node::EMPTY);
                (self.nodes.len() - 1) as NodeId
            }
        }
    }

    fn push(&mut self, x: NodeId) {
        let node = &mut self.nodes[x as usize];
        if node.flip {
            node.flip = false;
            std::mem::swap(&mut node.left, &mut node.right);
            let (l, r) = (node.left, node.right);
            if l != NIL {
                self.nodes[l as usize].flip ^= true;
            }
            if r != NIL {
                self.nodes[r as usize].flip ^= true;
            }
        }
    }

    fn rotate(&mut self, x: NodeId) {
        let p = self.nodes[x as usize].parent;
        let g = self.nodes[p as usize].parent;
        if self.nodes[p as usize].left == x {
            let b = self.nodes[x as usize].right;
            self.nodes[p as usize].left = b;
            if b != NIL {
                self.nodes[b as usize].parent = p;
            }
            self.nodes[x as usize].right = p;
        } else {
            let b = self.nodes[x as usize].left;
            self.nodes[p as usize].right = b;
            if b != NIL {
                self.nodes[b as usize].parent = p;
            }
            self.nodes[x as usize].left = p;
        }
        self.nodes[p as usize].parent = x;
        self.nodes[x as usize].parent = g;
        if g != NIL {
            if self.nodes[g as usize].left == p {
                self.nodes[g as usize].left = x;
            } else {
                self.nodes[g as usize].right = x;
            }
        }
    }

    fn splay(&mut self, x: NodeId) {
        let mut stack = std::mem::take(&mut self.stack);
        stack.clear();
        let mut y = x;
        stack.push(y);
        while self.nodes[y as usize].parent != NIL {
            y = self.nodes[y as usize].parent;
            stack.push(y);
        }
        while let Some(y) = stack.pop() {
            self.push(y);
        }
        self.stack = stack;

        loop {
            let p = self.nodes[x as usize].parent;
            if p == NIL {
                break;
            }
            let g = self.nodes[p as usize].parent;
            if g != NIL {
                let zig_zig =
                    (self.nodes[g as usize].left == p) == (self.nodes[p as usize].left == x);
                if zig_zig {
                    self.rotate(p);
                } else {
                    self.rotate(x);
                }
            }
            self.rotate(x);
        }
    }

    /// Splays `x` and reverses its tree if needed so that `x` is the last edge.
    fn make_last(&mut self, x: NodeId) {
        self.splay(x);
        if self.nodes[x as usize].right != NIL {
            debug_assert_eq!(self.nodes[x as usize].left, NIL, "not a path end");
            self.nodes[x as usize].flip = true;
            self.push(x);
        }
    }

    /// Splays `x` and reverses its tree if needed so that `x` is the first edge.
    fn make_first(&mut self, x: NodeId) {
        self.splay(x);
        if self.nodes[x as usize].left != NIL {
            debug_assert_eq!(self.nodes[x as usize].right, NIL, "not a path end");
            self.nodes[x as usize].flip = true;
            self.push(x);
        }
    }

    /// Creates a node for a new edge and joins it between two path ends.
    ///
    /// `before` and `after` are end edges of two different paths (or absent).
    pub(crate) fn link(&mut self, before: Option<NodeId>, after: Option<NodeId>) -> NodeId {
        let e = self.alloc();
        if let Some(a) = before {
            self.make_last(a);
            self.nodes[e as usize].left = a;
            self.nodes[a as usize].parent = e;
        }
        if let Some(b) = after {
            self.make_first(b);
            self.nodes[e as usize].right = b;
            self.nodes[b as usize].parent = e;
        }
        e
    }

    /// Removes an edge node, splitting its path in two.
    pub(crate) fn cut(&mut self, e: NodeId) {
        self.splay(e);
        let node = self.nodes[e as usize];
        if node.left != NIL {
            self.nodes[node.left as usize].parent = NIL;
        }
        if node.right != NIL {
            self.nodes[node.right as usize].parent = NIL;
        }
        self.nodes[e as usize] = Node::EMPTY;
        self.spare.push(e);
    }

    pub(crate) fn connected(&mut self, a: NodeId, b: NodeId) -> bool {
        if a == b {
            return true;
        }
        self.splay(a);
        self.splay(b);
        self.nodes[a as usize].parent != NIL
    }

    #[cfg(test)]
    fn sequence(&mut self, x: NodeId) -> Vec<NodeId> {
        self.splay(x);
        let mut out = Vec::new();
        let mut stack = Vec::new();
        let mut cur = x;
        loop {
            while cur != NIL {
                self.push(cur);
                stack.push(cur);
                cur = self.nodes[cur as usize].left;
            }
            match stack.pop() {
                Some(y) => {
                    out.push(y);
                    cur = self.nodes[y as usize].right;
                }
                None => break,
            }
        }
        out
    }
}
