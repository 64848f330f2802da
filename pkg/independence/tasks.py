import logging

from celery import shared_task

from .corpus import audit_family, build_corpus_family
from .serializers import CorpusAuditSerializer

logger = logging.getLogger("project")


@shared_task
def audit_corpus_family(seed: int, index: int, cap: int | None = None) -> dict:
    """
    Celery task rebuilding one corpus family from (seed, index) and auditing it.
    """
    audit = audit_family(build_corpus_family(int(seed), int(index), cap))
    logger.debug("Task audit_corpus_family finished for %s:%s", seed, index)
    return CorpusAuditSerializer(audit).data
