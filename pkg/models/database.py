import logging
from datetime import datetime
from typing import Iterator, Optional

from sqlalchemy import Boolean, Column, DateTime, Float, Integer, String, Text, UniqueConstraint, create_engine
from sqlalchemy.exc import SQLAlchemyError
from sqlalchemy.orm import Session, declarative_base, sessionmaker

from services.exceptions import PreconditionError

logger = logging.getLogger(__name__)

Base = declarative_base()

engine = None
SessionLocal: Optional[sessionmaker] = None


class WeightEnumeratorRow(Base):
    __tablename__ = "weight_enumerators"

    id = Column(Integer, primary_key=True, index=True)
    code_key = Column(String(64), nullable=False, index=True)
    genus = Column(Integer, nullable=False)
    n = Column(Integer, nullable=False)
    k = Column(Integer, nullable=False)
    canonical_text = Column(Text, nullable=False)
    term_count = Column(Integer, nullable=False)
    elapsed_ms = Column(Float, default=0.0)
    created_at = Column(DateTime, default=datetime.utcnow)

    __table_args__ = (
        UniqueConstraint("code_key", "genus", name="uq_enumerator_code_genus"),
    )


class VerificationRun(Base):
    __tablename__ = "verification_runs"

    id = Column(Integer, primary_key=True, index=True)
    selector = Column(String(32), nullable=False)
    passed = Column(Integer, nullable=False)
    failed = Column(Integer, nullable=False)
    all_passed = Column(Boolean, nullable=False)
    report_json = Column(Text, nullable=True)
    created_at = Column(DateTime, default=datetime.utcnow, index=True)


def configure(url: Optional[str]) -> bool:
    global engine, SessionLocal
    if not url:
        engine, SessionLocal = None, None
        return False
    engine = create_engine(url)
    SessionLocal = sessionmaker(autocommit=False, autoflush=False, bind=engine)
    return True


def init_db() -> bool:
    if engine is None:
        return False
    try:
        Base.metadata.create_all(bind=engine)
    except SQLAlchemyError as e:
        logger.warning(f"Enumerator cache unavailable, continuing in memory: {e}")
        return False
    return True


def get_session() -> Iterator[Session]:
    if not SessionLocal:
        raise PreconditionError("Enumerator cache database not configured")
    db = SessionLocal()
    try:
        yield db
    finally:
        db.close()


class EnumeratorStore:
    """Persists canonical-text enumerators keyed by (code key digest, genus)."""

    def __init__(self, url: Optional[str]):
        try:
            self.enabled = configure(url) and init_db()
        except SQLAlchemyError as e:
            logger.warning(f"Enumerator cache URL rejected, continuing in memory: {e}")
            self.enabled = False
        self._sessions = SessionLocal if self.enabled else None

    def load(self, code_key: str, genus: int) -> Optional[str]:
        if not self.enabled:
            return None
        try:
            with self._sessions() as db:
                row = (
                    db.query(WeightEnumeratorRow)
                    .filter_by(code_key=code_key, genus=genus)
                    .one_or_none()
                )
                return row.canonical_text if row else None
        except SQLAlchemyError as e:
            logger.warning(f"Cache read failed for {code_key} genus {genus}: {e}")
            return None

    def save(self, code_key: str, genus: int, n: int, k: int, text: str, term_count: int, elapsed_ms: float):
        if not self.enabled:
            return
        try:
            with self._sessions() as db:
                db.add(WeightEnumeratorRow(
                    code_key=code_key,
                    genus=genus,
                    n=n,
                    k=k,
                    canonical_text=text,
                    term_count=term_count,
                    elapsed_ms=elapsed_ms,
                ))
                db.commit()
        except SQLAlchemyError as e:
            logger.warning(f"Cache write failed for {code_key} genus {genus}: {e}")

    def record_run(self, selector: str, passed: int, failed: int, report_json: str):
        if not self.enabled:
            return
        try:
            with self._sessions() as db:
                db.add(VerificationRun(
                    selector=selector,
                    passed=passed,
                    failed=failed,
                    all_passed=failed == 0,
                    report_json=report_json,
                ))
                db.commit()
        except SQLAlchemyError as e:
            logger.warning(f"Could not record verification run: {e}")
