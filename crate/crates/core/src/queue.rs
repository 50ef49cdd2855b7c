//! FIFO queues that hold each item at most once.

use std::collections::VecDeque;

use crate::graph::VertexId;

pub(crate) struct VertexQueue {
    items: VecDeque<VertexId>,
    queued: Vec<bool>,
}

impl VertexQueue {
    pub(crate) fn new(n: usize) -> Self {
        VertexQueue {
            items: VecDeque::new(),
            queued: vec![false; n],
        }
    }

    pub(crate) fn push(&mut self, v: VertexId) {
        if !std::mem::replace(&mut self.queued[v as usize], true) {
            self.items.push_back(v);
        }
    }

    pub(crate) fn pop(&mut self) -> Option<VertexId> {
        let v = self.items.pop_front()?;
        self.queued[v as usize] = false;
        Some(v)
    }

    pub(crate) fn contains(&self, v: VertexId) -> bool {
        self.queued[v as usize]
    }
}
