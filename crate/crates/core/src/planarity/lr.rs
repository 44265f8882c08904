//! Left-right planarity test (Brandes' formulation of de Fraysseix and
//! Rosenstiehl) with embedding extraction.
//!
//! Works on raw edge lists so the solvers can feed it planarizations without
//! building a [`crate::graph::Graph`] first. Buffers are kept between calls.

const NONE: u32 = u32::MAX;

#[derive(Clone, Copy, Debug)]
struct Interval {
    low: u32,
    high: u32,
}

impl Interval {
    const EMPTY: Interval = Interval {
        low: NONE,
        high: NONE,
    };

    fn is_empty(&self) -> bool {
        self.low == NONE && self.high == NONE
    }
}

#[derive(Clone, Copy, Debug)]
struct ConflictPair {
    left: Interval,
    right: Interval,
}

impl ConflictPair {
    const EMPTY: ConflictPair = ConflictPair {
        left: Interval::EMPTY,
        right: Interval::EMPTY,
    };

    fn swap(&mut self) {
        std::mem::swap(&mut self.left, &mut self.right);
    }
}

#[derive(Default)]
pub struct LrPlanarity {
    adj: Vec<Vec<(u32, u32)>>,
    height: Vec<u32>,
    parent_edge: Vec<u32>,
    src: Vec<u32>,
    dst: Vec<u32>,
    oriented: Vec<bool>,
    lowpt: Vec<u32>,
    lowpt2: Vec<u32>,
    nesting: Vec<i64>,
    // insertion position in `out`, so sorting by nesting is stable w.r.t. DFS order
    seq: Vec<u32>,
    out: Vec<Vec<u32>>,
    refs: Vec<u32>,
    side: Vec<i8>,
    stack: Vec<ConflictPair>,
    stack_bottom: Vec<usize>,
    lowpt_edge: Vec<u32>,
    roots: Vec<u32>,
    left_ref: Vec<u32>,
    right_ref: Vec<u32>,
    rotation: Vec<Vec<usize>>,
}

impl LrPlanarity {
    pub fn new() -> Self {
        Self::default()
    }

    /// Planarity of the simple graph `(n, edges)`.
    pub fn is_planar(&mut self, n: usize, edges: &[(usize, usize)]) -> bool {
        self.run(n, edges)
    }

    /// Rotation system (cyclic neighbour order per vertex) if planar.
    pub fn embed(&mut self, n: usize, edges: &[(usize, usize)]) -> Option<Vec<Vec<usize>>> {
        if !self.run(n, edges) {
            return None;
        }
        self.build_embedding(n);
        Some(std::mem::take(&mut self.rotation))
    }

    fn reset(&mut self, n: usize, m: usize) {
        fn fill<T: Clone>(v: &mut Vec<T>, len: usize, value: T) {
            v.clear();
            v.resize(len, value);
        }
        if self.adj.len() < n {
            self.adj.resize_with(n, Vec::new);
            self.out.resize_with(n, Vec::new);
        }
        for list in self.adj.iter_mut().take(n) {
            list.clear();
        }
        for list in self.out.iter_mut().take(n) {
            list.clear();
        }
        fill(&mut self.height, n, NONE);
        fill(&mut self.parent_edge, n, NONE);
        fill(&mut self.src, m, NONE);
        fill(&mut self.dst, m, NONE);
        fill(&mut self.oriented, m, false);
        fill(&mut self.lowpt, m, 0);
        fill(&mut self.lowpt2, m, 0);
        fill(&mut self.nesting, m, 0);
        fill(&mut self.seq, m, 0);
        fill(&mut self.refs, m, NONE);
        fill(&mut self.side, m, 1);
        fill(&mut self.stack_bottom, m, 0);
        fill(&mut self.lowpt_edge, m, NONE);
        self.stack.clear();
        self.roots.clear();
    }

    fn run(&mut self, n: usize, edges: &[(usize, usize)]) -> bool {
        let m = edges.len();
        if n > 2 && m > 3 * n - 6 {
            return false;
        }
        self.reset(n, m);
        for (id, &(u, v)) in edges.iter().enumerate() {
            debug_assert!(u != v && u < n && v < n);
            self.adj[u].push((v as u32, id as u32));
            self.adj[v].push((u as u32, id as u32));
        }
        for v in 0..n as u32 {
            if self.height[v as usize] == NONE {
                self.height[v as usize] = 0;
                self.roots.push(v);
                self.orient(v);
            }
        }
        for v in 0..n {
            let (nesting, seq) = (&self.nesting, &self.seq);
            self.out[v].sort_by_key(|&e| (nesting[e as usize], seq[e as usize]));
        }
        for i in 0..self.roots.len() {
            let r = self.roots[i];
            if !self.test(r) {
                return false;
            }
        }
        true
    }

    fn orient(&mut self, v: u32) {
        let vi = v as usize;
        let parent = self.parent_edge[vi];
        for i in 0..self.adj[vi].len() {
            let (w, id) = self.adj[vi][i];
            let (wi, e) = (w as usize, id as usize);
            if self.oriented[e] {
                continue;
            }
            self.oriented[e] = true;
            self.src[e] = v;
            self.dst[e] = w;
            self.seq[e] = self.out[vi].len() as u32;
            self.out[vi].push(id);
            self.lowpt[e] = self.height[vi];
            self.lowpt2[e] = self.height[vi];
            if self.height[wi] == NONE {
                self.parent_edge[wi] = id;
                self.height[wi] = self.height[vi] + 1;
                self.orient(w);
            } else {
                self.lowpt[e] = self.height[wi];
            }
            self.nesting[e] = 2 * self.lowpt[e] as i64;
            if self.lowpt2[e] < self.height[vi] {
                self.nesting[e] += 1;
            }
            if parent != NONE {
                let p = parent as usize;
                if self.lowpt[e] < self.lowpt[p] {
                    self.lowpt2[p] = self.lowpt[p].min(self.lowpt2[e]);
                    self.lowpt[p] = self.lowpt[e];
                } else if self.lowpt[e] > self.lowpt[p] {
                    self.lowpt2[p] = self.lowpt2[p].min(self.lowpt[e]);
                } else {
                    self.lowpt2[p] = self.lowpt2[p].min(self.lowpt2[e]);
                }
            }
        }
    }

    fn test(&mut self, v: u32) -> bool {
        let vi = v as usize;
        let parent = self.parent_edge[vi];
        for i in 0..self.out[vi].len() {
            let ei = self.out[vi][i];
            let w = self.dst[ei as usize] as usize;
            self.stack_bottom[ei as usize] = self.stack.len();
            if ei == self.parent_edge[w] {
                if !self.test(w as u32) {
                    return false;
                }
            } else {
                self.lowpt_edge[ei as usize] = ei;
                self.stack.push(ConflictPair {
                    left: Interval::EMPTY,
                    right: Interval { low: ei, high: ei },
                });
            }
            if self.lowpt[ei as usize] < self.height[vi] {
                if i == 0 {
                    self.lowpt_edge[parent as usize] = self.lowpt_edge[ei as usize];
                } else if !self.add_constraints(ei, parent) {
                    return false;
                }
            }
        }
        if parent != NONE {
            self.remove_back_edges(parent);
        }
        true
    }

    fn conflicting(&self, iv: &Interval, b: u32) -> bool {
        !iv.is_empty() && self.lowpt[iv.high as usize] > self.lowpt[b as usize]
    }

    fn lowest(&self, p: &ConflictPair) -> u32 {
        if p.left.is_empty() {
            return self.lowpt[p.right.low as usize];
        }
        if p.right.is_empty() {
            return self.lowpt[p.left.low as usize];
        }
        self.lowpt[p.left.low as usize].min(self.lowpt[p.right.low as usize])
    }

    fn set_ref(&mut self, at: u32, to: u32) {
        if at != NONE {
            self.refs[at as usize] = to;
        }
    }

    fn add_constraints(&mut self, ei: u32, e: u32) -> bool {
        let mut p = ConflictPair::EMPTY;
        // Return edges of ei all go to the right.
        loop {
            let mut q = self.stack.pop().expect("ei has return edges");
            if !q.left.is_empty() {
                q.swap();
            }
            if !q.left.is_empty() {
                return false;
            }
            if self.lowpt[q.right.low as usize] > self.lowpt[e as usize] {
                if p.right.is_empty() {
                    p.right = q.right;
                } else {
                    self.set_ref(p.right.low, q.right.high);
                }
                p.right.low = q.right.low;
            } else {
                self.refs[q.right.low as usize] = self.lowpt_edge[e as usize];
            }
            if self.stack.len() == self.stack_bottom[ei as usize] {
                break;
            }
        }
        // Earlier siblings' return edges conflicting with ei go to the left.
        while let Some(top) = self.stack.last() {
            if !(self.conflicting(&top.left, ei) || self.conflicting(&top.right, ei)) {
                break;
            }
            let mut q = self.stack.pop().expect("non-empty");
            if self.conflicting(&q.right, ei) {
                q.swap();
            }
            if self.conflicting(&q.right, ei) {
                return false;
            }
            self.set_ref(p.right.low, q.right.high);
            if q.right.low != NONE {
                p.right.low = q.right.low;
            }
            if p.left.is_empty() {
                p.left = q.left;
            } else {
                self.set_ref(p.left.low, q.left.high);
            }
            p.left.low = q.left.low;
        }
        if !(p.left.is_empty() && p.right.is_empty()) {
            self.stack.push(p);
        }
        true
    }

    fn remove_back_edges(&mut self, e: u32) {
        let u = self.src[e as usize];
        let hu = self.height[u as usize];
        while let Some(top) = self.stack.last() {
            if self.lowest(top) != hu {
                break;
            }
            let p = self.stack.pop().expect("non-empty");
            if p.left.low != NONE {
                self.side[p.left.low as usize] = -1;
            }
        }
        if let Some(mut p) = self.stack.pop() {
            while p.left.high != NONE && self.dst[p.left.high as usize] == u {
                p.left.high = self.refs[p.left.high as usize];
            }
            if p.left.high == NONE && p.left.low != NONE {
                self.refs[p.left.low as usize] = p.right.low;
                self.side[p.left.low as usize] = -1;
                p.left.low = NONE;
            }
            while p.right.high != NONE && self.dst[p.right.high as usize] == u {
                p.right.high = self.refs[p.right.high as usize];
            }
            if p.right.high == NONE && p.right.low != NONE {
                self.refs[p.right.low as usize] = p.left.low;
                self.side[p.right.low as usize] = -1;
                p.right.low = NONE;
            }
            self.stack.push(p);
        }
        if self.lowpt[e as usize] < hu {
            let top = self.stack.last().expect("e has a return edge");
            let (hl, hr) = (top.left.high, top.right.high);
            self.refs[e as usize] =
                if hl != NONE && (hr == NONE || self.lowpt[hl as usize] > self.lowpt[hr as usize]) {
                    hl
                } else {
                    hr
                };
        }
    }

    fn sign(&mut self, e: u32) -> i8 {
        let mut chain = Vec::new();
        let mut x = e;
        while self.refs[x as usize] != NONE {
            chain.push(x);
            x = self.refs[x as usize];
        }
        let mut s = self.side[x as usize];
        for &y in chain.iter().rev() {
            let y = y as usize;
            self.side[y] *= s;
            self.refs[y] = NONE;
            s = self.side[y];
        }
        self.side[e as usize]
    }

    fn build_embedding(&mut self, n: usize) {
        let m = self.src.len();
        for e in 0..m {
            let s = self.sign(e as u32) as i64;
            self.nesting[e] *= s;
        }
        self.rotation.clear();
        self.rotation.resize_with(n, Vec::new);
        for v in 0..n {
            let (nesting, seq) = (&self.nesting, &self.seq);
            self.out[v].sort_by_key(|&e| (nesting[e as usize], seq[e as usize]));
            let dst = &self.dst;
            self.rotation[v].extend(self.out[v].iter().map(|&e| dst[e as usize] as usize));
        }
        self.left_ref.clear();
        self.left_ref.resize(n, NONE);
        self.right_ref.clear();
        self.right_ref.resize(n, NONE);
        for i in 0..self.roots.len() {
            let r = self.roots[i];
            self.embed_dfs(r);
        }
    }

    fn embed_dfs(&mut self, v: u32) {
        let vi = v as usize;
        for i in 0..self.out[vi].len() {
            let ei = self.out[vi][i];
            let wi = self.dst[ei as usize] as usize;
            if ei == self.parent_edge[wi] {
                self.rotation[wi].insert(0, vi);
                self.left_ref[vi] = wi as u32;
                self.right_ref[vi] = wi as u32;
                self.embed_dfs(wi as u32);
            } else if self.side[ei as usize] == 1 {
                let r = self.right_ref[wi] as usize;
                let pos = position(&self.rotation[wi], r);
                self.rotation[wi].insert(pos + 1, vi);
            } else {
                let l = self.left_ref[wi] as usize;
                let pos = position(&self.rotation[wi], l);
                self.rotation[wi].insert(pos, vi);
                self.left_ref[wi] = v;
            }
        }
    }
}

fn position(list: &[usize], x: usize) -> usize {
    list.iter()
        .position(|&y| y == x)
        .expect("reference neighbour present in rotation")
}
