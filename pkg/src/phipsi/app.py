import logging
import sys
from dataclasses import replace

import click
from rich.logging import RichHandler

from .cruncher.circulant import classify_principal
from .cruncher.groupring import (GroupRingElement, ideal_generated, in_phi_image, phi, psi,
                                 verify_quotient_iso)
from .cruncher.groups import make_group, quotient, subgroup_generated
from .cruncher.laurent import LaurentElement, classify_laurent
from .cruncher.modring import make_ring
from .cruncher.radicals import jacobson_closed_form, nilradical_closed_form, nilradical_frobenius
from .data_cache import PhiCache
from .errors import InvalidInputError, PhipsiError
from .harness.census import ideal_census
from .harness.runner import SuiteBounds, run_suite
from .utils import jsoncodec
from .utils.rendering import emit, emit_suite

CONTEXT_SETTINGS = dict(help_option_names=['-h', '--help'])


class PhipsiGroup(click.Group):
    """Turns library errors into a one-line message and exit code 1."""

    def invoke(self, ctx):
        try:
            return super().invoke(ctx)
        except PhipsiError as e:
            raise click.ClickException(f"{type(e).__name__}: {e}")


def ring_options(f):
    f = click.option('-m', '--modulus', type=int, default=None, help='Coefficient ring Z/n (a prime p for F_p)')(f)
    f = click.option('-g', '--group', 'group', type=str, default=None, help='Cyclic factor orders, e.g. "2,4"')(f)
    f = click.option('-i', '--input', 'source', type=str, default=None, help='JSON document, "-" for stdin')(f)
    f = click.option('-f', '--format', 'fmt', type=click.Choice(['json', 'table']), default='json')(f)
    return f


def flag_ring_and_group(modulus, group):
    if modulus is None or group is None:
        raise InvalidInputError("Both --modulus and --group are required without --input")
    return make_ring(modulus), make_group(jsoncodec.parse_group(group))


def ring_and_group_from(source, modulus, group):
    if source is not None:
        return jsoncodec.ring_and_group(jsoncodec.read_document(source))
    return flag_ring_and_group(modulus, group)


def element_from(source, modulus, group, coeffs) -> GroupRingElement:
    if source is not None:
        return jsoncodec.default_service().load(source, "element")
    if coeffs is None:
        raise InvalidInputError("Give --coeffs or --input")
    R, G = flag_ring_and_group(modulus, group)
    return GroupRingElement(R, G, jsoncodec.parse_ints(coeffs))


def subgroup_from(source, modulus, group, gens):
    if source is not None:
        return jsoncodec.default_service().load(source, "subgroup")
    if gens is None:
        raise InvalidInputError("Give --subgroup-gens or --input")
    R, G = flag_ring_and_group(modulus, group)
    return R, G, subgroup_generated(G, jsoncodec.parse_generators(gens))


@click.group(cls=PhipsiGroup, context_settings=CONTEXT_SETTINGS)
@click.option('-v', '--verbose', is_flag=True, default=False)
def phipsi(verbose: bool):
    """Subgroups, ideals and the maps between them for group rings over Z/n."""
    FORMAT = "%(message)s"
    logging.basicConfig(
        level="DEBUG" if verbose else "INFO", format=FORMAT, datefmt="[%X]", handlers=[RichHandler()]
    )


@phipsi.command(context_settings=CONTEXT_SETTINGS)
@ring_options
@click.option('-c', '--coeffs', type=str, default=None, help='Coefficients in group enumeration order')
def classify(modulus, group, source, fmt, coeffs):
    """Decide whether the principal ideal xRG of F_p C_m lies in the image of Phi."""
    x = element_from(source, modulus, group, coeffs)
    logging.debug(f"Classifying {x}")
    emit(classify_principal(x).to_dict(), fmt, title=f"{x.ring.name}{x.group.name}")


@phipsi.command('classify-laurent', context_settings=CONTEXT_SETTINGS)
@click.option('-m', '--modulus', type=int, default=0, help='A prime p, or 0 for the integers')
@click.option('-t', '--terms', type=str, default=None, help='exponent:coefficient pairs, e.g. "3:2,-1:3"')
@click.option('-i', '--input', 'source', type=str, default=None, help='JSON document, "-" for stdin')
@click.option('-f', '--format', 'fmt', type=click.Choice(['json', 'table']), default='json')
def classify_laurent_cmd(modulus, terms, source, fmt):
    """Decide whether xRG is in the image of Phi for G infinite cyclic."""
    if source is not None:
        x = jsoncodec.default_service().load(source, "laurent")
    elif terms is not None:
        x = LaurentElement(modulus, jsoncodec.parse_terms(terms))
    else:
        raise InvalidInputError("Give --terms or --input")
    emit(classify_laurent(x).to_dict(), fmt, title=f"{x.ring_name} C_inf")


@phipsi.command('phi', context_settings=CONTEXT_SETTINGS)
@ring_options
@click.option('-s', '--subgroup-gens', 'gens', type=str, default=None, help='Generators as exponent vectors, e.g. "1,0;0,2"')
def phi_cmd(modulus, group, source, fmt, gens):
    """Echelon basis of Phi(N) = I(R,N)RG."""
    R, G, N = subgroup_from(source, modulus, group, gens)
    J = phi(R, G, N)
    doc = dict(subgroup=N.label, order=N.order, **J.to_dict())
    emit(doc, fmt, title=f"Phi({N.label}) in {R.name}{G.name}")


@phipsi.command('psi', context_settings=CONTEXT_SETTINGS)
@ring_options
@click.option('-c', '--coeffs', type=str, default=None,
              help='Generators of the ideal, ";" between elements')
def psi_cmd(modulus, group, source, fmt, coeffs):
    """The subgroup {g : g-1 in J} of an ideal J."""
    if source is not None:
        name, obj = jsoncodec.default_service().unpack(jsoncodec.read_document(source))
        if name == "element":
            J = ideal_generated([obj])
        elif name == "subspace":
            J = obj
        else:
            raise InvalidInputError(f"psi needs an element or a subspace, got a {name}")
    else:
        if coeffs is None:
            raise InvalidInputError("Give --coeffs or --input")
        R, G = flag_ring_and_group(modulus, group)
        J = ideal_generated([GroupRingElement(R, G, c) for c in jsoncodec.parse_generators(coeffs)], R, G)
    N = psi(J)
    emit({"subgroup": N.label, "order": N.order,
          "elements": [str(J.group.element_of(i)) for i in N.elements],
          "ideal_dimension": J.dimension,
          "in_phi_image": in_phi_image(J) is not None}, fmt)


@phipsi.command(context_settings=CONTEXT_SETTINGS)
@ring_options
@click.option('-k', '--kind', type=click.Choice(['nilradical', 'jacobson', 'frobenius']), default='nilradical')
def radical(modulus, group, source, fmt, kind):
    """Closed form of the nilradical or the Jacobson radical of RG."""
    R, G = ring_and_group_from(source, modulus, group)
    if kind == 'frobenius':
        J = nilradical_frobenius(R, G)
        emit({"kind": "frobenius", "ring": R.name, **J.to_dict()}, fmt)
        return
    report = nilradical_closed_form(R, G) if kind == 'nilradical' else jacobson_closed_form(R, G)
    emit(report.to_dict(), fmt, title=f"{kind} of {R.name}{G.name}")


@phipsi.command(context_settings=CONTEXT_SETTINGS)
@ring_options
@click.option('-l', '--census-limit', type=int, default=10**6, help='Largest subspace count scanned exhaustively')
def census(modulus, group, source, fmt, census_limit):
    """Phi image, non-unit ideal count and Psi-fiber sizes of F_p G."""
    R, G = ring_and_group_from(source, modulus, group)
    c = ideal_census(R.modulus, G.orders, census_limit, PhiCache())
    emit(c.to_dict(), fmt, title=f"Census of {R.name}{G.name}", frame=c.to_frame())


@phipsi.command('quotient-check', context_settings=CONTEXT_SETTINGS)
@ring_options
@click.option('-s', '--subgroup-gens', 'gens', type=str, default=None, help='Generators as exponent vectors, e.g. "1,0;0,2"')
def quotient_check(modulus, group, source, fmt, gens):
    """Check RG/Phi(N) against R(G/N) by structure constants."""
    R, G, N = subgroup_from(source, modulus, group, gens)
    ok = verify_quotient_iso(R, G, N)
    emit({"ring": R.name, "group": G.name, "subgroup": N.label, "cosets": quotient(G, N).size,
          "isomorphic": ok}, fmt)
    if not ok:
        sys.exit(1)


@phipsi.command(context_settings=CONTEXT_SETTINGS)
@click.argument('suite', type=str, default='all')
@click.option('-p', '--primes', type=str, default=None, help='Primes to sweep, e.g. "2,3"')
@click.option('--max-order', type=int, default=None, help='Cap on every group order bound')
@click.option('--seed', type=int, default=0)
@click.option('-w', '--workers', type=int, default=4)
@click.option('-l', '--census-limit', type=int, default=10**5)
@click.option('-f', '--format', 'fmt', type=click.Choice(['json', 'table']), default='json')
def verify(suite, primes, max_order, seed, workers, census_limit, fmt):
    """Run a verification suite (section1..section4, or all); exit 1 on any failure."""
    bounds = SuiteBounds(seed=seed, workers=workers, census_limit=census_limit)
    if primes is not None:
        bounds = replace(bounds, primes=jsoncodec.parse_group(primes))
    bounds = bounds.with_max_order(max_order)
    logging.debug(f"Suite bounds: {bounds}")

    res = run_suite(suite, bounds)
    emit_suite(res, fmt)
    if not res.passed:
        sys.exit(1)


if __name__ == "__main__":
    phipsi()
