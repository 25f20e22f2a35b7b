"""
Interfaccia a riga di comando (CLI) di singstar.

Utilizzo:
    singstar validate data/d237.star --ids
    singstar invariants data/d237.star --epsilon 1
    singstar symmetry data/quadrilatero.star --points data/armonici.points
    singstar quotient data/d355.star --action data/d355_sigma3.action
    singstar family D 5 5 5 --quotients --engine
    singstar family fermat 3
    singstar moebius crossratio 0:1 1:0 1:1 2:1
    singstar moebius group data/armonici.points
    singstar hj expand 8/5
    singstar batch data/*.star --output invarianti.csv

Uscita 0 in caso di successo, 1 per errori di dominio, 2 per errori di
sintassi dei file o di utilizzo.
"""

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Callable, Dict, List, Optional, Sequence, Tuple

from rich.console import Console
from rich.logging import RichHandler

from singstar import __version__
from singstar.core.config import ClasseJ, Config, FormatoOutput
from singstar.core.errors import GraphSyntaxError, SingstarError
from singstar.core.hirzebruch_jung import hj_evaluate, hj_expand
from singstar.core.razionali import format_rational, parse_rational
from singstar.graphs.chain_graph import ChainGraph
from singstar.graphs.plumbing import PlumbingGraph
from singstar.graphs.star_graph import StarGraph, canonical_form, graphs_isomorphic
from singstar.invariants.riepilogo import summarize
from singstar.invariants.seifert import seifert_pairs
from singstar.io_handlers.csv_handler import CSVHandler
from singstar.io_handlers.formati import load_action, load_points, load_star, serialize_action
from singstar.quotients.actions import InvolutionKind, involution_action, rotation_action
from singstar.quotients.engine import GrafoQuoziente, star_quotient
from singstar.quotients.families import (
    CENTRAL_INVOLUTION_QUOTIENTS,
    central_involution_quotient,
    engine_tetrahedral_quotient,
    family_tetrahedral,
    family_triangle,
    family_triangle_quotients,
    triangle_table_agreement,
)
from singstar.reporting.report_generator import GeneratoreReport
from singstar.symmetry.moebius import (
    EQUIANHARMONIC,
    ProjPoint,
    cross_ratio,
    identify_group,
    j_invariant,
    label_preserving_group,
)
from singstar.symmetry.report import (
    SymmetryOptions,
    aut_gamma,
    fermat_symmetry,
    realize_finite_group,
    symmetry_report,
)

logger = logging.getLogger(__name__)

Voci = List[Tuple[str, str]]


class _EsitoNegativo(Exception):
    """Report stampato ma comando fallito (uscita 1)."""

    def __init__(self, voci: Voci):
        super().__init__()
        self.voci = voci


class _ErroreDiUso(Exception):
    """Argomento posizionale malformato o in numero errato (uscita 2)."""


def _si_no(valore: bool) -> str:
    return "yes" if valore else "no"


def descrivi_grafo(grafo: GrafoQuoziente) -> str:
    """Descrizione su una riga di catena, stella o plumbing."""
    if isinstance(grafo, ChainGraph):
        if grafo.is_smooth:
            return "smooth point"
        return "chain " + " ".join(str(w) for w in grafo.weights)
    if isinstance(grafo, StarGraph):
        return str(canonical_form(grafo))
    nodi = " ".join(f"{n.id}:{n.weight}" for n in grafo.nodes)
    archi = " ".join(f"{u}-{v}" for u, v in sorted(grafo.edges))
    return f"plumbing nodes {nodi} edges {archi}"


def _nome_triangolo(grafo: StarGraph) -> str:
    pesi = ",".join(str(ramo.weights[0]) for ramo in grafo.branches)
    return f"D_{{{pesi}}}"


# --- comandi ------------------------------------------------------------------


def cmd_validate(args: argparse.Namespace, config: Config) -> Voci:
    grafo = load_star(args.file, verifica_definitezza=False)
    grado = grafo.grado_orbifold()
    voci: Voci = [
        ("status", "OK" if grado > 0 else "INVALID"),
        ("definite", _si_no(grado > 0)),
        ("genus", str(grafo.genus)),
        ("central_weight", str(grafo.central_weight)),
        ("branches", str(grafo.num_branches)),
        ("seifert_pairs", " ".join(str(c) for c in seifert_pairs(grafo)) or "none"),
        ("seifert_degree", format_rational(grado)),
    ]
    if args.ids:
        for id_curva, descrizione, peso in grafo.curve_ids():
            voci.append((f"curve {id_curva}", f"{descrizione} weight {peso}"))
    if grado <= 0:
        raise _EsitoNegativo(voci)
    return voci


def cmd_invariants(args: argparse.Namespace, config: Config) -> Voci:
    grafo = load_star(args.file)
    epsilon = args.epsilon if args.epsilon is not None else config.simmetria.epsilon
    riepilogo = summarize(grafo, epsilon, config.reticolo.limite_automorfismi)
    return riepilogo.voci()


def _valore_j(testo: str):
    if testo.lower() in ("equianharmonic", "zero-class"):
        return EQUIANHARMONIC
    return parse_rational(testo)


def cmd_symmetry(args: argparse.Namespace, config: Config) -> Voci:
    grafo = load_star(args.file)
    j_class = ClasseJ(args.j_class) if args.j_class else None
    if j_class is None and grafo.genus == 1 and grafo.num_branches == 0:
        j_class = config.simmetria.j_class
    opzioni = SymmetryOptions(
        points=load_points(args.points) if args.points else None,
        lam=parse_rational(args.lam) if args.lam else None,
        j=_valore_j(args.j) if args.j else None,
        j_class=j_class,
        epsilon=args.epsilon if args.epsilon is not None else config.simmetria.epsilon,
        limite_automorfismi=config.reticolo.limite_automorfismi,
    )
    return symmetry_report(grafo, opzioni).voci()


def _azione(args: argparse.Namespace, grafo: StarGraph):
    if args.action:
        return load_action(args.action)
    if args.standard == "rotation":
        return rotation_action(grafo)
    return involution_action(grafo, InvolutionKind(args.standard))


def cmd_quotient(args: argparse.Namespace, config: Config) -> Voci:
    grafo = load_star(args.file)
    spec = _azione(args, grafo)
    seed = args.seed if args.seed is not None else config.quoziente.seed_blow_down
    risultato = star_quotient(grafo, spec, seed=seed)
    voci: Voci = []
    if args.show_action:
        voci += [("action", riga) for riga in serialize_action(spec).splitlines()]
    tipo = {ChainGraph: "chain", StarGraph: "star", PlumbingGraph: "plumbing"}[type(risultato.graph)]
    voci += [
        ("order", str(spec.order)),
        ("result", tipo),
        ("graph", descrivi_grafo(risultato.graph)),
        ("cyclic_quotient", _si_no(risultato.is_cyclic_quotient)),
        ("contractions", str(len(risultato.blowdown_log))),
    ]
    voci += [("contraction", str(c)) for c in risultato.blowdown_log]
    return voci


def _famiglia_d(args: argparse.Namespace) -> Voci:
    p, q, r = args.parametri
    grafo = family_triangle(p, q, r)
    voci: Voci = [
        ("family", _nome_triangolo(grafo)),
        ("graph", descrivi_grafo(grafo)),
        ("aut_gamma", aut_gamma(grafo).description().name),
    ]
    if not (args.quotients or args.engine):
        return voci

    tabella = family_triangle_quotients(p, q, r)
    if not tabella:
        voci.append(("quotients", "none"))
    for voce in tabella:
        voci.append((f"quotient {voce.group}", voce.name))
    chiave = tuple(sorted((p, q, r)))
    fissato = CENTRAL_INVOLUTION_QUOTIENTS.get(chiave)
    if fissato is not None:
        voci.append(("quotient σ1", descrivi_grafo(fissato)))

    if args.engine:
        for attesa, calcolata, accordo in triangle_table_agreement(p, q, r):
            voci.append(
                (f"engine {attesa.group}", f"{descrivi_grafo(calcolata)} agree: {_si_no(accordo)}")
            )
        if fissato is not None:
            calcolata = central_involution_quotient(p, q, r)
            accordo = graphs_isomorphic(fissato, calcolata)
            voci.append(("engine σ1", f"{descrivi_grafo(calcolata)} agree: {_si_no(accordo)}"))
    return voci


def _famiglia_t(args: argparse.Namespace) -> Voci:
    (m,) = args.parametri
    tetraedrica, ottaedrica = family_tetrahedral(m)
    voci: Voci = [
        ("family", f"T_{m}"),
        ("tetrahedral", descrivi_grafo(tetraedrica)),
        ("octahedral", descrivi_grafo(ottaedrica)),
    ]
    if args.engine:
        calcolata = engine_tetrahedral_quotient(m)
        voci.append(
            ("engine", f"{descrivi_grafo(calcolata)} agree: {_si_no(graphs_isomorphic(ottaedrica, calcolata))}")
        )
    return voci


def cmd_family(args: argparse.Namespace, config: Config) -> Voci:
    attesi = {"D": 3, "T": 1, "fermat": 1, "realize": 2}
    if args.nome == "realize":
        if len(args.parametri_grezzi) != 2:
            raise _ErroreDiUso("uso: family realize PFILE B")
        b = _intero_cli(args.parametri_grezzi[1])
        cfg = load_points(args.parametri_grezzi[0])
        grafo = realize_finite_group(cfg, b)
        opzioni = SymmetryOptions(
            points=cfg if len(cfg) > 3 else None,
            limite_automorfismi=config.reticolo.limite_automorfismi,
        )
        return [("graph", descrivi_grafo(grafo))] + symmetry_report(grafo, opzioni).voci()

    if len(args.parametri_grezzi) != attesi[args.nome]:
        raise _ErroreDiUso(
            f"family {args.nome} richiede {attesi[args.nome]} parametri interi"
        )
    args.parametri = [_intero_cli(v) for v in args.parametri_grezzi]
    if args.nome == "D":
        return _famiglia_d(args)
    if args.nome == "T":
        return _famiglia_t(args)
    (d,) = args.parametri
    return [("family", f"fermat {d}")] + fermat_symmetry(d).voci()


def _intero_cli(testo: str) -> int:
    try:
        return int(testo)
    except ValueError:
        raise _ErroreDiUso(f"intero atteso, trovato {testo!r}") from None


def cmd_moebius(args: argparse.Namespace, config: Config) -> Voci:
    if args.operazione == "group":
        cfg = load_points(args.valori[0])
        gruppo = label_preserving_group(cfg)
        descrizione = identify_group(gruppo)
        return [("group", descrizione.name), ("order", str(descrizione.order))] + [
            ("map", str(m)) for m in gruppo
        ]
    if args.operazione == "crossratio":
        if len(args.valori) == 1:
            punti = load_points(args.valori[0]).points
            if len(punti) < 4:
                raise SingstarError(f"servono quattro punti, il file ne contiene {len(punti)}")
            punti = punti[:4]
        elif len(args.valori) == 4:
            punti = tuple(ProjPoint.parse(v) for v in args.valori)
        else:
            raise _ErroreDiUso("servono un file di punti oppure quattro punti X:Y")
        lam = cross_ratio(*punti)
        return [("cross_ratio", format_rational(lam)), ("j", format_rational(j_invariant(lam)))]
    lam = parse_rational(args.valori[0])
    return [("j", format_rational(j_invariant(lam)))]


def cmd_hj(args: argparse.Namespace, config: Config) -> Voci:
    if args.operazione == "expand":
        if len(args.valori) != 1 or len(args.valori[0].split("/")) != 2:
            raise _ErroreDiUso(f"frazione N/Q attesa, trovato {' '.join(args.valori)!r}")
        n, q = (_intero_cli(v) for v in args.valori[0].split("/"))
        return [("chain", " ".join(str(c) for c in hj_expand(n, q)))]
    n, q = hj_evaluate([_intero_cli(v) for v in args.valori])
    return [("n", str(n)), ("q", str(q)), ("fraction", format_rational(Fraction(n, q)))]


def _riga_nuda(args: argparse.Namespace, voci: Voci) -> Optional[str]:
    """`hj` in testo stampa solo il valore (pesi oppure N/Q) se manca --keyed."""
    if args.comando != "hj" or args.keyed:
        return None
    chiave = "chain" if args.operazione == "expand" else "fraction"
    return dict(voci)[chiave] + "\n"


def cmd_batch(args: argparse.Namespace, config: Config) -> Voci:
    risultati = CSVHandler.calcola_invarianti(
        args.files, config.simmetria.epsilon, config.reticolo.limite_automorfismi
    )
    CSVHandler.esporta_risultati(risultati, args.output, args.formato)
    errori = sum(1 for r in risultati if r.get("error"))
    voci: Voci = [
        ("files", str(len(risultati))),
        ("errors", str(errori)),
        ("output", str(args.output)),
    ]
    if errori:
        raise _EsitoNegativo(voci)
    return voci


COMANDI: Dict[str, Callable[[argparse.Namespace, Config], Voci]] = {
    "validate": cmd_validate,
    "invariants": cmd_invariants,
    "symmetry": cmd_symmetry,
    "quotient": cmd_quotient,
    "family": cmd_family,
    "moebius": cmd_moebius,
    "hj": cmd_hj,
    "batch": cmd_batch,
}


# --- parser -----------------------------------------------------------------


def crea_parser() -> argparse.ArgumentParser:
    """Parser con tutti i sottocomandi."""
    parser = argparse.ArgumentParser(
        prog="singstar",
        description="Simmetrie e quozienti di singolarità quasi omogenee",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("--config", type=Path, help="File di configurazione YAML o JSON")
    parser.add_argument(
        "--format",
        choices=[f.value for f in FormatoOutput],
        help="Formato del report (default da configurazione: text)",
    )
    parser.add_argument("--verbose", action="store_true", help="Log di debug su stderr")

    subparsers = parser.add_subparsers(dest="comando", help="Comando da eseguire")

    p = subparsers.add_parser("validate", help="Valida un file di stella")
    p.add_argument("file", type=Path)
    p.add_argument("--ids", action="store_true", help="Elenca gli id delle curve")

    p = subparsers.add_parser("invariants", help="Invarianti di Seifert e del reticolo")
    p.add_argument("file", type=Path)
    p.add_argument("--epsilon", type=int, help="Grado della forma per il limite di Ganter")

    p = subparsers.add_parser("symmetry", help="Determinazione di G/G1")
    p.add_argument("file", type=Path)
    p.add_argument("--points", type=Path, help="File di punti sulla curva centrale")
    moduli = p.add_mutually_exclusive_group()
    moduli.add_argument("--lambda", dest="lam", help="Birapporto A/B (quattro rami)")
    moduli.add_argument("--j", help="Invariante j A/B oppure 'equianharmonic'")
    p.add_argument("--j-class", dest="j_class", choices=[c.value for c in ClasseJ])
    p.add_argument("--epsilon", type=int)

    p = subparsers.add_parser("quotient", help="Quoziente per un'azione annotata")
    p.add_argument("file", type=Path)
    azione = p.add_mutually_exclusive_group(required=True)
    azione.add_argument("--action", type=Path, help="File di annotazione")
    azione.add_argument(
        "--standard",
        choices=[k.value for k in InvolutionKind] + ["rotation"],
        help="Annotazione standard per stelle a tre rami",
    )
    p.add_argument("--show-action", action="store_true", help="Stampa l'annotazione usata")
    p.add_argument("--seed", type=int, help="Ordine casuale delle contrazioni")

    p = subparsers.add_parser("family", help="Famiglie con nome")
    p.add_argument("nome", choices=["D", "T", "fermat", "realize"])
    p.add_argument("parametri_grezzi", nargs="*", metavar="PARAM")
    p.add_argument("--quotients", action="store_true", help="Tabella dei quozienti (D)")
    p.add_argument("--engine", action="store_true", help="Ricalcola le tabelle con il motore")

    p = subparsers.add_parser("moebius", help="Trasformazioni di Möbius")
    p.add_argument("operazione", choices=["group", "crossratio", "j"])
    p.add_argument("valori", nargs="+")

    p = subparsers.add_parser("hj", help="Frazioni di Hirzebruch-Jung")
    p.add_argument("operazione", choices=["expand", "eval"])
    p.add_argument("valori", nargs="+")
    p.add_argument("--keyed", action="store_true", help="Report `chiave: valore` completo")

    p = subparsers.add_parser("batch", help="Export degli invarianti di più stelle")
    p.add_argument("files", type=Path, nargs="+")
    p.add_argument("--output", type=Path, required=True)
    p.add_argument("--formato", choices=["csv", "xlsx"], default="csv")

    return parser


def configura_logging(verbose: bool) -> None:
    """RichHandler su stderr; stdout resta riservato ai report."""
    handler = RichHandler(console=Console(stderr=True), show_time=False, show_path=False)
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        format="%(message)s",
        handlers=[handler],
        force=True,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point CLI."""
    parser = crea_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    if not args.comando:
        parser.print_help(sys.stderr)
        return 2

    configura_logging(args.verbose)
    generatore = GeneratoreReport()
    try:
        config = Config.da_file(args.config) if args.config else Config()
        formato = FormatoOutput(args.format) if args.format else config.report.formato
        try:
            voci = COMANDI[args.comando](args, config)
            codice = 0
        except _EsitoNegativo as esito:
            voci, codice = esito.voci, 1
        nuda = _riga_nuda(args, voci) if formato is FormatoOutput.TEXT else None
        sys.stdout.write(
            nuda or generatore.render(voci, formato, titolo=f"singstar {args.comando}")
        )
        return codice
    except _ErroreDiUso as exc:
        parser.print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except GraphSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SingstarError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
