use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use super::engine::{ones, Mask};

/// Raised when the node or time budget runs out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Abort;

/// Node/time limits shared by all workers of one search.
pub(crate) struct Budget {
    node_limit: u64,
    deadline: Option<Instant>,
    nodes: AtomicU64,
    prunes: AtomicU64,
    aborted: AtomicBool,
}

impl Budget {
    pub fn new(node_limit: u64, time_ms: u64, start: Instant) -> Self {
        Budget {
            node_limit,
            deadline: (time_ms > 0).then(|| start + Duration::from_millis(time_ms)),
            nodes: AtomicU64::new(0),
            prunes: AtomicU64::new(0),
            aborted: AtomicBool::new(false),
        }
    }

    pub fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }

    pub fn prunes(&self) -> u64 {
        self.prunes.load(Ordering::Relaxed)
    }

    pub fn counter(&self) -> Counter<'_> {
        Counter {
            budget: self,
            nodes: 0,
            prunes: 0,
        }
    }

    fn absorb(&self, nodes: u64, prunes: u64) -> Result<(), Abort> {
        let total = self.nodes.fetch_add(nodes, Ordering::Relaxed) + nodes;
        self.prunes.fetch_add(prunes, Ordering::Relaxed);
        let over = (self.node_limit > 0 && total > self.node_limit)
            || self.deadline.is_some_and(|d| Instant::now() >= d);
        if over {
            self.aborted.store(true, Ordering::Relaxed);
        }
        if self.aborted.load(Ordering::Relaxed) {
            Err(Abort)
        } else {
            Ok(())
        }
    }
}

const SYNC_EVERY: u64 = 256;

/// Per-worker tally, merged into the shared budget every few hundred nodes.
pub(crate) struct Counter<'a> {
    budget: &'a Budget,
    nodes: u64,
    prunes: u64,
}

impl Counter<'_> {
    #[inline]
    pub fn node(&mut self) -> Result<(), Abort> {
        self.nodes += 1;
        if self.nodes >= SYNC_EVERY {
            self.sync()
        } else {
            Ok(())
        }
    }

    #[inline]
    pub fn prune(&mut self) {
        self.prunes += 1;
    }

    pub fn sync(&mut self) -> Result<(), Abort> {
        let (n, p) = (self.nodes, self.prunes);
        self.nodes = 0;
        self.prunes = 0;
        self.budget.absorb(n, p)
    }
}

impl Drop for Counter<'_> {
    fn drop(&mut self) {
        let _ = self.sync();
    }
}

/// Best set found so far, shared across workers.
pub(crate) struct Incumbent {
    size: AtomicUsize,
    set: Mutex<Mask>,
}

impl Incumbent {
    pub fn new(seed: Mask) -> Self {
        Incumbent {
            size: AtomicUsize::new(ones(seed)),
            set: Mutex::new(seed),
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.size.load(Ordering::Relaxed)
    }

    pub fn offer(&self, x: Mask) {
        let k = ones(x);
        if k <= self.size() {
            return;
        }
        let mut set = self.set.lock().unwrap();
        if k > self.size.load(Ordering::Relaxed) {
            *set = x;
            self.size.store(k, Ordering::Relaxed);
        }
    }

    pub fn get(&self) -> (Mask, usize) {
        let set = self.set.lock().unwrap();
        (*set, ones(*set))
    }
}
