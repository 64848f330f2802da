import logging

from celery import shared_task

from .serializers import ArtinReportSerializer, SigmaCatalogueSerializer
from .services import artin_disjoint, sigma_catalogue

logger = logging.getLogger("project")


@shared_task
def build_catalogue(ell: int, bound: int) -> dict:
    """
    Celery task building one catalogue and returning its machine form.
    """
    catalogue = sigma_catalogue(int(ell), int(bound))
    logger.debug("Task build_catalogue finished for ell=%s", ell)
    return SigmaCatalogueSerializer(catalogue).data


@shared_task
def check_disjoint(ell1: int, ell2: int, bound: int) -> dict:
    """
    Celery task comparing the order sets of two characteristics.
    """
    report = artin_disjoint(int(ell1), int(ell2), int(bound))
    logger.debug("Task check_disjoint finished for (%s, %s)", ell1, ell2)
    return ArtinReportSerializer(report).data
