//! Exact BIN PACKING decision: can the items fill `k` parts of sum `B`?

use std::collections::HashSet;

use crate::gls::BinPackingInstance;

use super::OracleError;

pub const BINPACK_CAP: usize = 20;

/// Returns a partition into `k` parts (as item sizes, largest first) when
/// one exists.
pub fn bin_packing_decide(inst: &BinPackingInstance) -> Result<Option<Vec<Vec<usize>>>, OracleError> {
    inst.validate()?;
    if inst.items.len() > BINPACK_CAP {
        return Err(OracleError::TooLarge {
            n: inst.items.len(),
            cap: BINPACK_CAP,
        });
    }
    let mut items = inst.items.clone();
    items.sort_unstable_by(|a, b| b.cmp(a));
    let mut packer = Packer {
        items: &items,
        capacity: inst.capacity,
        loads: vec![0; inst.k],
        parts: vec![Vec::new(); inst.k],
        failed: HashSet::new(),
    };
    Ok(packer.place(0).then_some(packer.parts))
}

struct Packer<'a> {
    items: &'a [usize],
    capacity: usize,
    loads: Vec<usize>,
    parts: Vec<Vec<usize>>,
    /// `(next item, sorted loads)` states known to be dead ends.
    failed: HashSet<(usize, Vec<usize>)>,
}

impl Packer<'_> {
    fn place(&mut self, i: usize) -> bool {
        if i == self.items.len() {
            return self.loads.iter().all(|&l| l == self.capacity);
        }
        let mut key = self.loads.clone();
        key.sort_unstable();
        if self.failed.contains(&(i, key.clone())) {
            return false;
        }
        let size = self.items[i];
        let mut tried_loads = Vec::new();
        for p in 0..self.loads.len() {
            let load = self.loads[p];
            // Parts with equal load are interchangeable.
            if load + size > self.capacity || tried_loads.contains(&load) {
                continue;
            }
            tried_loads.push(load);
            self.loads[p] += size;
            self.parts[p].push(size);
            if self.place(i + 1) {
                return true;
            }
            self.parts[p].pop();
            self.loads[p] -= size;
        }
        self.failed.insert((i, key));
        false
    }
}
