//! Command line front end and JSON service for the qutrit Bloch-vector model.

pub mod api;
pub mod commands;
pub mod service;
