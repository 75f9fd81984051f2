use alloc::string::String;
use alloc::vec::Vec;

use crate::partition::Violation;

/// Errors raised by the core. Rooms are rendered 1-based in messages.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("self-loop on node `{0}` ({0}, {0})")]
    SelfLoop(String),
    #[error("room count must be at least 1")]
    ZeroRooms,
    #[error(
        "{rooms} rooms requested for {nodes} nodes; the room count may not exceed the node count"
    )]
    TooManyRooms { rooms: usize, nodes: usize },
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    #[error("room {} out of range for {rooms} rooms", .room + 1)]
    RoomOutOfRange { room: usize, rooms: usize },
    #[error("node `{0}` has no room")]
    Unassigned(String),
    #[error("node `{node}` is already in room {}; not a move", .room + 1)]
    NotAMove { node: String, room: usize },
    #[error("assignment violates {} hard constraint(s)", .0.len())]
    InvalidAssignment(Vec<Violation>),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("room {} is full", .0 + 1)]
    RoomFull(usize),
    #[error("instance has {nodes} nodes, above the exhaustive search bound of {bound}")]
    InstanceTooLarge { nodes: usize, bound: usize },
    #[error("duplicate record id `{0}`")]
    DuplicateId(String),
}
