"""
singstar
========

Simmetrie e quozienti di singolarità di superficie normali quasi omogenee
con grafo risolutivo a stella.

Il grafo duale della risoluzione minimale (curva centrale, rami di curve
razionali) determina gli invarianti di Seifert, il gruppo di discriminante
del reticolo d'intersezione e, insieme alla posizione dei punti di
attacco sulla curva centrale, il gruppo delle simmetrie G/G1. Per azioni
di ordine 2 e 3 annotate sul grafo il pacchetto calcola il grafo del
quoziente.
"""

__version__ = "0.1.0"

from singstar.core.config import Config
from singstar.graphs.chain_graph import ChainGraph
from singstar.graphs.plumbing import PlumbingGraph
from singstar.graphs.star_graph import StarGraph

__all__ = [
    "Config",
    "ChainGraph",
    "PlumbingGraph",
    "StarGraph",
]
