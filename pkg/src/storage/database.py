"""
Database connection and operations manager
"""

import os
from contextlib import contextmanager
from datetime import datetime, timezone
from pathlib import Path
from typing import List, Optional, Sequence

from sqlalchemy import create_engine, Engine, text
from sqlalchemy.orm import sessionmaker, scoped_session
from sqlalchemy.exc import SQLAlchemyError

from src.catalog.catalog import CurveReport
from src.storage.models import Base, CurveRecord
from src.utils.logger import setup_logger

DEFAULT_DATABASE_URL = 'sqlite:///data/catalog.db'


class DatabaseManager:
    """
    Database manager for curve reports.
    Handles connections, sessions, and report operations.
    """

    def __init__(self, database_url: Optional[str] = None):
        """
        Initialize database manager.

        Args:
            database_url: SQLAlchemy URL (default: DATABASE_URL env var or sqlite:///data/catalog.db)
        """
        self.database_url = database_url or os.getenv('DATABASE_URL', DEFAULT_DATABASE_URL)
        self.logger = setup_logger(name="database_manager")
        self.engine: Optional[Engine] = None
        self.SessionLocal: Optional[sessionmaker] = None
        self._session_factory: Optional[scoped_session] = None

    def _engine_options(self) -> dict:
        if self.database_url.startswith('sqlite'):
            return {'echo': False}
        return {'pool_size': 10, 'max_overflow': 20, 'pool_pre_ping': True, 'echo': False}

    def _ensure_sqlite_directory(self) -> None:
        prefix = 'sqlite:///'
        if self.database_url.startswith(prefix) and self.database_url != 'sqlite:///:memory:':
            Path(self.database_url[len(prefix):]).parent.mkdir(parents=True, exist_ok=True)

    def connect(self) -> bool:
        """
        Create database engine and session factory.

        Returns:
            True if connected successfully, False otherwise
        """
        try:
            self.logger.info(f"Connecting to database: {self._mask_url(self.database_url)}")
            self._ensure_sqlite_directory()
            self.engine = create_engine(self.database_url, **self._engine_options())

            self.SessionLocal = sessionmaker(
                bind=self.engine,
                autocommit=False,
                autoflush=False,
                expire_on_commit=False,
            )
            self._session_factory = scoped_session(self.SessionLocal)

            with self.engine.connect() as conn:
                conn.execute(text("SELECT 1"))

            self.logger.info("Successfully connected to database")
            return True

        except SQLAlchemyError as e:
            self.logger.error(f"Failed to connect to database: {e}")
            return False
        except OSError as e:
            self.logger.error(f"Unexpected error connecting to database: {e}")
            return False

    def disconnect(self):
        """Close database connections."""
        try:
            if self._session_factory:
                self._session_factory.remove()
            if self.engine:
                self.engine.dispose()
            self.logger.info("Disconnected from database")
        except SQLAlchemyError as e:
            self.logger.error(f"Error disconnecting from database: {e}")

    def create_tables(self) -> bool:
        """
        Create all database tables.

        Returns:
            True if tables created successfully, False otherwise
        """
        try:
            if not self.engine:
                self.logger.error("Database not connected. Call connect() first.")
                return False

            Base.metadata.create_all(bind=self.engine)
            self.logger.info("Database tables created successfully")
            return True

        except SQLAlchemyError as e:
            self.logger.error(f"Error creating tables: {e}")
            return False

    def drop_tables(self) -> bool:
        """
        Drop all database tables.

        Returns:
            True if tables dropped successfully, False otherwise
        """
        try:
            if not self.engine:
                self.logger.error("Database not connected. Call connect() first.")
                return False

            self.logger.warning("Dropping all database tables...")
            Base.metadata.drop_all(bind=self.engine)
            return True

        except SQLAlchemyError as e:
            self.logger.error(f"Error dropping tables: {e}")
            return False

    @contextmanager
    def get_session(self):
        """
        Get database session context manager.

        Yields:
            Database session

        Example:
            with db_manager.get_session() as session:
                record = session.query(CurveRecord).filter_by(exponents='4,9,11,15,16').first()
        """
        if not self._session_factory:
            raise RuntimeError("Database not connected. Call connect() first.")

        session = self._session_factory()
        try:
            yield session
            session.commit()
        except Exception:
            session.rollback()
            raise
        finally:
            session.close()

    def save_report(self, report: CurveReport) -> bool:
        """
        Insert or update one report.

        Returns:
            True if saved successfully, False otherwise
        """
        return self.save_reports([report]) == 1

    def save_reports(self, reports: Sequence[CurveReport]) -> int:
        """
        Save reports in one transaction, updating existing rows.

        Returns:
            Number of reports saved
        """
        saved_count = 0
        try:
            with self.get_session() as session:
                for report in reports:
                    record = CurveRecord.from_report(report)
                    existing = session.query(CurveRecord).filter_by(exponents=record.exponents).first()
                    if existing:
                        existing.update_from(record)
                        existing.updated_at = datetime.now(timezone.utc)
                    else:
                        session.add(record)
                    saved_count += 1
            self.logger.info(f"Saved {saved_count}/{len(reports)} reports to database")
        except SQLAlchemyError as e:
            self.logger.error(f"Error saving reports to database: {e}")
            return 0
        return saved_count

    def get_report(self, exponents: str) -> Optional[CurveReport]:
        """
        Get a report by its exponent list.

        Args:
            exponents: Comma separated exponents, e.g. "4,9,11,15,16"

        Returns:
            CurveReport if found, None otherwise
        """
        key = ",".join(p.strip() for p in exponents.split(',') if p.strip())
        try:
            with self.get_session() as session:
                record = session.query(CurveRecord).filter_by(exponents=key).first()
                return record.to_report() if record else None
        except SQLAlchemyError as e:
            self.logger.error(f"Error retrieving report from database: {e}")
            return None

    def get_reports_by_gonality(self, gonality: int, limit: Optional[int] = None) -> List[CurveReport]:
        """
        Get reports with the given gonality, ordered by genus then exponents.
        """
        try:
            with self.get_session() as session:
                query = (session.query(CurveRecord)
                         .filter_by(gonality=gonality)
                         .order_by(CurveRecord.genus, CurveRecord.exponents))
                if limit:
                    query = query.limit(limit)
                return [record.to_report() for record in query.all()]
        except SQLAlchemyError as e:
            self.logger.error(f"Error retrieving reports by gonality: {e}")
            return []

    def get_reports(self, min_genus: Optional[int] = None, max_genus: Optional[int] = None,
                    limit: Optional[int] = None, offset: int = 0) -> List[CurveReport]:
        """
        Get stored reports, optionally restricted to a genus range.
        """
        try:
            with self.get_session() as session:
                query = session.query(CurveRecord)
                if min_genus is not None:
                    query = query.filter(CurveRecord.genus >= min_genus)
                if max_genus is not None:
                    query = query.filter(CurveRecord.genus <= max_genus)
                query = query.order_by(CurveRecord.genus, CurveRecord.exponents).offset(offset)
                if limit:
                    query = query.limit(limit)
                return [record.to_report() for record in query.all()]
        except SQLAlchemyError as e:
            self.logger.error(f"Error retrieving reports from database: {e}")
            return []

    def count_reports(self) -> int:
        """
        Get total number of stored reports.
        """
        try:
            with self.get_session() as session:
                return session.query(CurveRecord).count()
        except SQLAlchemyError as e:
            self.logger.error(f"Error counting reports: {e}")
            return 0

    def _mask_url(self, url: str) -> str:
        """
        Mask password in database URL for logging.

        Args:
            url: Database URL

        Returns:
            Masked URL
        """
        if '@' in url:
            head, rest = url.split('@', 1)
            if '://' in head and head.count(':') > 1:
                return f"{head.rsplit(':', 1)[0]}:***@{rest}"
        return url
