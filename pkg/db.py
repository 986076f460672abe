"""
Database module for the Nichols workbench.
Handles the SQLite run log of CLI jobs.
"""

import sqlite3
from typing import Optional

from config import NICHOLS_DB_PATH


def get_connection(path: Optional[str] = None) -> sqlite3.Connection:
    """
    Open a SQLite connection with row factory configured.
    Returns a connection object.
    """
    conn = sqlite3.connect(path or NICHOLS_DB_PATH)
    conn.row_factory = sqlite3.Row
    return conn


def ensure_schema(conn: sqlite3.Connection) -> None:
    """
    Create tables if they don't exist.
    """
    cursor = conn.cursor()

    # job_runs table, one row per CLI invocation
    cursor.execute("""
        CREATE TABLE IF NOT EXISTS job_runs (
            id INTEGER PRIMARY KEY AUTOINCREMENT,
            command TEXT NOT NULL,
            family TEXT,
            input_key TEXT,
            cap INTEGER,
            started_at TEXT,
            finished_at TEXT,
            exit_code INTEGER,
            verdict TEXT,
            total INTEGER,
            cache_hit INTEGER DEFAULT 0,
            notes TEXT
        )
    """)

    cursor.execute("""
        CREATE INDEX IF NOT EXISTS idx_job_runs_started
            ON job_runs (started_at)
    """)

    conn.commit()

    # Migration: cache hits were not recorded in early run logs
    try:
        cursor.execute("SELECT cache_hit FROM job_runs LIMIT 1")
    except sqlite3.OperationalError:
        print("Migrating database: Adding cache_hit to job_runs...")
        cursor.execute("ALTER TABLE job_runs ADD COLUMN cache_hit INTEGER DEFAULT 0")
        conn.commit()


def insert_job_run(conn: sqlite3.Connection, run_data: dict) -> int:
    """
    Insert a job run record.
    Returns the run ID.
    """
    cursor = conn.cursor()
    cursor.execute("""
        INSERT INTO job_runs
        (command, family, input_key, cap, started_at, finished_at,
         exit_code, verdict, total, cache_hit, notes)
        VALUES (?, ?, ?, ?, ?, ?, ?, ?, ?, ?, ?)
    """, (
        run_data["command"],
        run_data.get("family"),
        run_data.get("input_key"),
        run_data.get("cap"),
        run_data.get("started_at"),
        run_data.get("finished_at"),
        run_data.get("exit_code", 0),
        run_data.get("verdict"),
        run_data.get("total"),
        int(bool(run_data.get("cache_hit", False))),
        run_data.get("notes", "")
    ))
    conn.commit()
    return cursor.lastrowid


def get_recent_runs(conn: sqlite3.Connection, limit: int = 20) -> list[sqlite3.Row]:
    """
    Get the most recent job runs, newest first.
    """
    cursor = conn.cursor()
    cursor.execute("""
        SELECT * FROM job_runs
        ORDER BY id DESC
        LIMIT ?
    """, (limit,))
    return cursor.fetchall()
