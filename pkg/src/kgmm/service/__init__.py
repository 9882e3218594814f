"""Persistence layer and REST API."""
from .app import create_app
from .store import EventStore, hash_token

__all__ = ["create_app", "EventStore", "hash_token"]
