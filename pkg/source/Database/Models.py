from datetime import datetime

from sqlalchemy import Boolean, Column, DateTime, ForeignKey, Integer, String, Text
from sqlalchemy.orm import declarative_base, relationship

Base = declarative_base()


class SearchRunModel(Base):
    __tablename__ = 'search_runs'
    id = Column(Integer, primary_key=True, autoincrement=True)
    size = Column(Integer, nullable=False)
    require = Column(String, nullable=False)
    forbid = Column(String, default="")
    top = Column(Integer, nullable=True)
    limit = Column(Integer, default=0)
    count = Column(Integer, default=0)
    exhaustive = Column(Boolean, default=True)
    created = Column(DateTime, default=datetime.utcnow)
    models = relationship("AlgebraModel", back_populates="run", cascade="all, delete-orphan",
                          order_by="AlgebraModel.position")


class AlgebraModel(Base):
    __tablename__ = 'algebras'
    id = Column(Integer, primary_key=True, autoincrement=True)
    run_id = Column(Integer, ForeignKey('search_runs.id'), nullable=False)
    position = Column(Integer, nullable=False)
    size = Column(Integer, nullable=False)
    top = Column(Integer, nullable=False)
    region = Column(String, nullable=True)
    text = Column(Text, nullable=False)
    run = relationship("SearchRunModel", back_populates="models")
