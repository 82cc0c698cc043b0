from . import count, expr, func, graph, orderstat, perm, pl

COMMANDS = [perm, graph, func, expr, orderstat, pl, count]
