"""
Storage package - Database models and connections
"""

from src.storage.models import Base, CurveRecord
from src.storage.database import DatabaseManager

__all__ = ['Base', 'CurveRecord', 'DatabaseManager']
