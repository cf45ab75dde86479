use crate::ring::{QueueOverflow, RingQueue};

use super::tree::THandle;

/// FIFO queue of `(tree vertex, distance)` pairs whose dequeue is gated on
/// the distance at the front.
///
/// Distances enter in non-decreasing order, so asking for distance `d`
/// drains exactly the level-`d` entries and then stops, leaving deeper
/// entries for the next level.
#[derive(Debug, Clone)]
pub struct DQueue {
    ring: RingQueue<(THandle, u32)>,
    last: u32,
}

impl DQueue {
    pub fn with_capacity(capacity: usize) -> Self {
        DQueue {
            ring: RingQueue::with_capacity(capacity),
            last: 0,
        }
    }

    #[inline]
    pub fn enqueue(&mut self, h: THandle, d: u32) -> Result<(), QueueOverflow> {
        debug_assert!(self.last <= d, "distance {d} enqueued after {}", self.last);
        self.ring.push((h, d))?;
        self.last = d;
        Ok(())
    }

    /// Removes and returns the front entry if its distance is `d`.
    #[inline]
    pub fn dequeue(&mut self, d: u32) -> Option<THandle> {
        match self.ring.front() {
            Some(&(h, front)) if front == d => {
                self.ring.pop();
                Some(h)
            }
            _ => None,
        }
    }

    pub fn front(&self) -> Option<(THandle, u32)> {
        self.ring.front().copied()
    }

    pub fn len(&self) -> usize {
        self.ring.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ring.is_empty()
    }

    pub fn capacity(&self) -> usize {
        self.ring.capacity()
    }

    /// Entries front to back.
    pub fn iter(&self) -> impl Iterator<Item = (THandle, u32)> + '_ {
        self.ring.iter().copied()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(i: u32) -> THandle {
        THandle(i)
    }

    #[test]
    fn fifo_front() {
        let mut q = DQueue::with_capacity(4);
        q.enqueue(h(1), 1).unwrap();
        q.enqueue(h(2), 1).unwrap();
        assert_eq!(q.front(), Some((h(1), 1)));
    }

    #[test]
    fn gated_dequeue() {
        let mut q = DQueue::with_capacity(4);
        q.enqueue(h(1), 1).unwrap();
        q.enqueue(h(2), 2).unwrap();
        assert_eq!(q.dequeue(1), Some(h(1)));
        assert_eq!(q.iter().collect::<Vec<_>>(), vec![(h(2), 2)]);
        assert_eq!(q.dequeue(1), None);
        assert_eq!(q.iter().collect::<Vec<_>>(), vec![(h(2), 2)]);
    }

    #[test]
    fn empty_dequeue() {
        let mut q = DQueue::with_capacity(1);
        assert_eq!(q.dequeue(5), None);
        assert!(q.is_empty());
    }

    #[test]
    fn capacity_bound() {
        let n = 6;
        let mut q = DQueue::with_capacity(n);
        for i in 0..n as u32 - 1 {
            q.enqueue(h(i), 1).unwrap();
        }
        assert_eq!(q.len(), n - 1);
        q.enqueue(h(9), 2).unwrap();
        assert!(q.enqueue(h(10), 2).is_err());
    }
}
