import logging
from red_commons.logging import maybe_update_logger_class, getLogger


maybe_update_logger_class()

log = getLogger("groupalg")
ring_log = getLogger("groupalg.rings")
algebra_log = getLogger("groupalg.algebra")
graph_log = getLogger("groupalg.graph")
decide_log = getLogger("groupalg.decide")


def set_logging_level(level=logging.INFO):
    log.setLevel(level)
    ring_log.setLevel(level)
    algebra_log.setLevel(level)
    graph_log.setLevel(level)
    decide_log.setLevel(level)
