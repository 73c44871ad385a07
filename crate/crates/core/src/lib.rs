#![no_std]
extern crate alloc;

pub mod bounds;
pub mod canon;
pub mod coulson;
pub mod enumerate;
pub mod graph;
pub mod graph6;
pub mod spectral;
