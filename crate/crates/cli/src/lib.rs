//! Command line front end and HTTP/JSON service for the Multiple Hook
//! Removing Game.

pub mod api;
pub mod cache;
pub mod commands;
pub mod records;
