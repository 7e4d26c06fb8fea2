use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InstanceError {
    #[error("item sizes sum to {sum}, expected k*B = {expected}")]
    SumMismatch { sum: usize, expected: usize },
    #[error("item {index} has size {size}, larger than the capacity {capacity}")]
    ItemTooLarge {
        index: usize,
        size: usize,
        capacity: usize,
    },
    #[error("item {0} has size zero")]
    ZeroItem(usize),
    #[error("instance needs at least one item and one part")]
    Empty,
}

/// Can the items be split into `k` parts of sum exactly `capacity` each?
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BinPackingInstance {
    #[serde(rename = "A")]
    pub items: Vec<usize>,
    pub k: usize,
    #[serde(rename = "B")]
    pub capacity: usize,
}

impl BinPackingInstance {
    pub fn new(items: Vec<usize>, k: usize, capacity: usize) -> Result<Self, InstanceError> {
        let inst = BinPackingInstance { items, k, capacity };
        inst.validate()?;
        Ok(inst)
    }

    /// All items equal to `a`.
    pub fn uniform(a: usize, n: usize, k: usize, capacity: usize) -> Result<Self, InstanceError> {
        Self::new(vec![a; n], k, capacity)
    }

    pub fn validate(&self) -> Result<(), InstanceError> {
        if self.items.is_empty() || self.k == 0 {
            return Err(InstanceError::Empty);
        }
        for (index, &size) in self.items.iter().enumerate() {
            if size == 0 {
                return Err(InstanceError::ZeroItem(index));
            }
            if size > self.capacity {
                return Err(InstanceError::ItemTooLarge {
                    index,
                    size,
                    capacity: self.capacity,
                });
            }
        }
        let sum: usize = self.items.iter().sum();
        if sum != self.k * self.capacity {
            return Err(InstanceError::SumMismatch {
                sum,
                expected: self.k * self.capacity,
            });
        }
        Ok(())
    }

    pub fn is_uniform(&self) -> bool {
        self.items.windows(2).all(|w| w[0] == w[1])
    }
}
