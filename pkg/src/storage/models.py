"""
SQLAlchemy models for curve report storage
"""

import json
from datetime import datetime, timezone

from sqlalchemy import Boolean, Column, DateTime, Index, Integer, String, Text
from sqlalchemy.orm import declarative_base

from src.catalog.catalog import CurveReport

Base = declarative_base()


class CurveRecord(Base):
    """
    One curve report. The queryable columns are copied out of the full
    report, which is kept verbatim as JSON.
    """
    __tablename__ = 'curve_reports'

    # Primary key: exponent list such as "4,9,11,15,16"
    exponents = Column(String(255), primary_key=True, nullable=False)

    genus = Column(Integer, nullable=False, index=True)
    gonality = Column(Integer, nullable=False, index=True)
    ell = Column(Integer, nullable=True)
    scroll_type = Column(String(64), nullable=True)
    smooth = Column(Boolean, nullable=False, default=False)

    gorenstein = Column(Boolean, nullable=False, default=False)
    kunz = Column(Boolean, nullable=False, default=False)
    nearly_gorenstein = Column(Boolean, nullable=False, default=False)
    nearly_normal = Column(Boolean, nullable=False, default=False)

    report_json = Column(Text, nullable=False)

    created_at = Column(DateTime, default=lambda: datetime.now(timezone.utc), nullable=False)
    updated_at = Column(DateTime, default=lambda: datetime.now(timezone.utc), onupdate=lambda: datetime.now(timezone.utc), nullable=False)

    __table_args__ = (
        Index('idx_curve_genus_gonality', 'genus', 'gonality'),
    )

    def __repr__(self) -> str:
        return f"<CurveRecord(exponents='{self.exponents}', genus={self.genus}, gonality={self.gonality})>"

    def to_report(self) -> CurveReport:
        return CurveReport.from_dict(json.loads(self.report_json))

    def update_from(self, other: 'CurveRecord') -> None:
        for column in ('genus', 'gonality', 'ell', 'scroll_type', 'smooth', 'gorenstein',
                       'kunz', 'nearly_gorenstein', 'nearly_normal', 'report_json'):
            setattr(self, column, getattr(other, column))

    @classmethod
    def from_report(cls, report: CurveReport) -> 'CurveRecord':
        """
        Create a record from a curve report.

        Args:
            report: Report built by the catalog

        Returns:
            CurveRecord instance
        """
        c = report.classification
        scroll = "S_{" + ",".join(str(m) for m in report.scroll_type) + "}" if report.fit else None
        return cls(
            exponents=report.label,
            genus=report.genus,
            gonality=report.gonality,
            ell=report.ell,
            scroll_type=scroll,
            smooth=report.smooth_fit,
            gorenstein=c['gorenstein'],
            kunz=c['kunz'],
            nearly_gorenstein=c['nearly_gorenstein'],
            nearly_normal=c['nearly_normal'],
            report_json=json.dumps(report.to_dict(), separators=(',', ':')),
        )
