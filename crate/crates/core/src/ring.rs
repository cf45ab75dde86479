//! Fixed-capacity FIFO ring buffer shared by both searches.

use thiserror::Error;

#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("queue overflow: capacity {capacity} exhausted")]
pub struct QueueOverflow {
    pub capacity: usize,
}

#[derive(Debug, Clone)]
pub struct RingQueue<T> {
    buf: Box<[T]>,
    head: usize,
    len: usize,
}

impl<T: Copy + Default> RingQueue<T> {
    pub fn with_capacity(capacity: usize) -> Self {
        RingQueue {
            buf: vec![T::default(); capacity].into_boxed_slice(),
            head: 0,
            len: 0,
        }
    }

    pub fn capacity(&self) -> usize {
        self.buf.len()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn is_full(&self) -> bool {
        self.len == self.buf.len()
    }

    #[inline]
    pub fn push(&mut self, item: T) -> Result<(), QueueOverflow> {
        let cap = self.buf.len();
        if self.len == cap {
            return Err(QueueOverflow { capacity: cap });
        }
        let mut tail = self.head + self.len;
        if tail >= cap {
            tail -= cap;
        }
        self.buf[tail] = item;
        self.len += 1;
        Ok(())
    }

    #[inline]
    pub fn front(&self) -> Option<&T> {
        (self.len > 0).then(|| &self.buf[self.head])
    }

    #[inline]
    pub fn pop(&mut self) -> Option<T> {
        if self.len == 0 {
            return None;
        }
        let item = self.buf[self.head];
        self.head += 1;
        if self.head == self.buf.len() {
            self.head = 0;
        }
        self.len -= 1;
        Some(item)
    }

    pub fn clear(&mut self) {
        self.head = 0;
        self.len = 0;
    }

    /// Items front to back.
    pub fn iter(&self) -> impl Iterator<Item = &T> {
        let cap = self.buf.len();
        (0..self.len).map(move |k| &self.buf[(self.head + k) % cap])
    }
}
