from typing import List, Tuple

from sqlalchemy import create_engine
from sqlalchemy.orm import Session, sessionmaker

from source.Cli.AlgebraFile import parse_algebra, render_algebra
from source.CoreAlgebra import FiniteAlgebra
from source.Database.Models import AlgebraModel, Base, SearchRunModel
from source.ErrorHandling import CoreException
from source.Logging import Logger
from source.ModelSearch import SearchResult, SearchTask, classify


class CatalogHelper:
    """Search runs and their models, stored in the algebra text format."""

    def __init__(self, db_url: str):
        self.db_logger = Logger("Catalog", "toolkit.log")
        self.engine = create_engine(db_url)
        Base.metadata.create_all(self.engine)
        self.Session = sessionmaker(bind=self.engine, expire_on_commit=False)

    def _get_session(self) -> Session:
        return self.Session()

    async def record_run(self, task: SearchTask, result: SearchResult) -> int:
        with self._get_session() as session:
            run = SearchRunModel(size=task.size, require=",".join(task.require), forbid=",".join(task.forbid),
                                 top=task.top, limit=task.limit, count=result.count, exhaustive=result.exhaustive)
            for position, alg in enumerate(result.models):
                region = classify(alg).value if alg.is_two_operation else None
                run.models.append(AlgebraModel(position=position, size=alg.size, top=alg.top, region=region,
                                               text=render_algebra(alg)))
            session.add(run)
            session.commit()
            await self.db_logger.info(f"Recorded search run {run.id} with {len(result.models)} models")
            return run.id

    def load_models(self, run_id: int) -> List[FiniteAlgebra]:
        with self._get_session() as session:
            run = session.get(SearchRunModel, run_id)
            if not run:
                raise CoreException("CatalogHelper.load_models", f"search run {run_id} not found")
            return [parse_algebra(model.text) for model in run.models]

    def get_all_runs(self) -> List[Tuple[int, int, str, int]]:
        """(id, size, require, count) of every recorded run."""
        with self._get_session() as session:
            runs = session.query(SearchRunModel).order_by(SearchRunModel.id).all()
            return [(run.id, run.size, run.require, run.count) for run in runs]
