"""
Кэш результатов перебора: один JSON-файл на тройку (n, d, t).
"""
import json
import logging
from io import BytesIO
from pathlib import Path

from django.conf import settings
from django.core.exceptions import ValidationError
from rest_framework.exceptions import ParseError
from rest_framework.parsers import JSONParser
from rest_framework.renderers import JSONRenderer

from api.serializers import CacheDocumentSerializer

from .engine import SEARCH_ENGINE_VERSION, nvalue_search

logger = logging.getLogger(__name__)


def cache_dir(directory=None):
    return Path(directory or settings.DELRECON_CACHE_DIR)


def cache_path(n, d, t, directory=None):
    return cache_dir(directory) / f'n{n}_d{d}_t{t}.json'


def _read_document(path):
    try:
        data = JSONParser().parse(BytesIO(path.read_bytes()))
    except (ParseError, UnicodeDecodeError) as error:
        raise ValidationError(
            f'Повреждённый файл кэша {path}: {error}', code='corrupt_cache'
        )
    serializer = CacheDocumentSerializer(data=data)
    if not serializer.is_valid():
        raise ValidationError(
            f'Повреждённый файл кэша {path}: '
            f'{json.dumps(serializer.errors, ensure_ascii=False)}',
            code='corrupt_cache',
        )
    return serializer


def cache_load(n, d, t, directory=None):
    """
    Отчёт из кэша или None, если записи нет или она устарела.

    Повреждённая запись не используется: возбуждается ValidationError.
    """

    path = cache_path(n, d, t, directory)
    if not path.exists():
        return None
    serializer = _read_document(path)
    report = serializer.to_report()
    if (report.n, report.d, report.t) != (n, d, t):
        raise ValidationError(
            f'Файл кэша {path} содержит запись для '
            f'({report.n}, {report.d}, {report.t}).',
            code='corrupt_cache',
        )
    if report.engine_version != SEARCH_ENGINE_VERSION:
        logger.info('Запись кэша %s устарела, будет пересчитана', path)
        return None
    logger.debug('Запись %s прочитана из кэша', path)
    return report


def cache_store(report, directory=None):
    path = cache_path(report.n, report.d, report.t, directory)
    path.parent.mkdir(parents=True, exist_ok=True)
    document = CacheDocumentSerializer.from_report(report)
    path.write_bytes(JSONRenderer().render(document))
    logger.debug('Запись %s сохранена в кэш', path)
    return path


def cached_search(n, d, t, *, directory=None, use_cache=True, **options):
    """Перебор N(n, d, t) с чтением и записью кэша."""

    if use_cache:
        report = cache_load(n, d, t, directory)
        if report is not None:
            return report
    report = nvalue_search(n, d, t, **options)
    if use_cache:
        cache_store(report, directory)
    return report


def cache_entries(directory=None):
    """Пары (путь, отчёт или ошибка) для всех файлов кэша."""

    entries = []
    for path in sorted(cache_dir(directory).glob('n*_d*_t*.json')):
        try:
            entries.append((path, _read_document(path).to_report()))
        except ValidationError as error:
            entries.append((path, error))
    return entries


def cache_clear(directory=None):
    removed = 0
    for path in cache_dir(directory).glob('n*_d*_t*.json'):
        path.unlink()
        removed += 1
    logger.info('Удалено записей кэша: %d', removed)
    return removed
