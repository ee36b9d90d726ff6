# Copyright (C) 2026
#
# This file is part of Wpstack.
#
# Wpstack is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# Wpstack is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

"""Graded Hom and Ext, the vector bundle test, the tangent sheaf from the Euler sequence and the ampleness
probe.
"""

from .exceptions import AmpleProbeFailure, MalformedInputError
from .gmodule import (FreeModule, GradedMap, Presentation, cokernel_projection, compose, direct_sum_of,
                      hilbert_function, sym_presentation, tensor_presentation)
from .groebner import (free_resolution, kernel, minimal_generators, shift_positions, submodule_presentation,
                       unit_vector, vector_to_column)
from .logger import Log
from .options import KernelOptions
from .quotient import is_epi_sheaf, is_mono_sheaf, is_torsion, saturate
from .sheafops import structure_twist, wgg_check_presentation


def hom_free(degrees, target):
    """Hom(F, N) for a free F with generator degrees g_a: the sum of N[g_a], generator (a, b) at position
    a * rank(N) + b

    :param tuple[int] degrees:
    :param gmodule.Presentation target:
    :rtype: gmodule.Presentation
    """
    ring = target.ring
    hom_degrees = [h - g for g in degrees for h in target.generator_degrees]
    relations = [shift_positions(v, a * target.rank) for a in range(len(degrees))
                 for v in target.relation_vectors() if v]
    return Presentation(FreeModule(ring, hom_degrees), [vector_to_column(v, ring, len(hom_degrees)) for v in relations])


def hom_dual_map(source_degrees, target_degrees, columns, module):
    """Hom(d, N): Hom(Q, N) -> Hom(P, N) for the map d: P -> Q of free modules given by its columns

    :param tuple[int] source_degrees:
        generator degrees of P
    :param tuple[int] target_degrees:
        generator degrees of Q
    :param list[dict] columns:
        images of the generators of P, as vectors of Q
    :param gmodule.Presentation module:
        N
    :rtype: gmodule.GradedMap
    """
    rank = module.rank
    source = hom_free(target_degrees, module)
    target = hom_free(source_degrees, module)
    images = []
    for a in range(len(target_degrees)):
        for b in range(rank):
            image = {}
            for j, column in enumerate(columns):
                for (mon, pos), c in column.items():
                    if pos == a:
                        image[(mon, j * rank + b)] = c
            images.append(image)
    return GradedMap.from_vectors(source, target, images, check=False)


def graded_hom(source, target, logger=None):
    """Hom_A(M, N) as the kernel of Hom(F_0, N) -> Hom(F_1, N)

    :param gmodule.Presentation source:
    :param gmodule.Presentation target:
    :rtype: gmodule.Presentation
    """
    source.ring.check_same(target.ring)
    order = source.cover.order()
    columns = [v for v in source.relation_vectors() if v]
    dual = hom_dual_map(source.generator_degrees, tuple(order.vector_degree(v) for v in columns), columns, target)
    return kernel(dual, logger=logger)[0]


class ExtResult:
    """Ext^i_A(M, N) with its torsion flag"""

    def __init__(self, index, module):
        self.index = index
        self.module = module
        self.is_torsion = is_torsion(module)

    def dims(self, lo, hi):
        return [hilbert_function(self.module, d) for d in range(lo, hi + 1)]

    def __repr__(self):
        return "ExtResult(index=%d, torsion=%s, %r)" % (self.index, self.is_torsion, self.module)


def graded_ext(source, target, i, resolution=None, minimal=False, logger=None):
    """Ext^i_A(M, N): homology at slot i of Hom(F_., N) for a free resolution F_. of M

    :param gmodule.Presentation source:
    :param gmodule.Presentation target:
    :param int i:
        non-negative index
    :param groebner.FreeResolution resolution:
        resolution of 'source', computed if None
    :param bool minimal:
        use a minimal resolution when one has to be computed
    :rtype: ExtResult
    """
    if i < 0:
        raise MalformedInputError("Ext index should be non-negative, got %d" % i)
    ring = source.ring
    ring.check_same(target.ring)
    resolution = resolution or free_resolution(source, minimal=minimal, logger=logger)
    if i >= len(resolution.modules):
        return ExtResult(i, Presentation.free(ring, []))
    degrees = resolution.modules[i]
    ambient = hom_free(degrees, target)
    rank = ambient.rank
    if i < resolution.length:
        outgoing = hom_dual_map(resolution.modules[i + 1], degrees, resolution.differentials[i], target)
        cycles = kernel(outgoing, logger=logger)[1].image_vectors()
    else:
        cycles = [unit_vector(ring, a) for a in range(rank)]
    boundaries = []
    if i > 0:
        incoming = hom_dual_map(degrees, resolution.modules[i - 1], resolution.differentials[i - 1], target)
        boundaries = [v for v in incoming.image_vectors() if v]
    relations = ambient.relation_vectors() + boundaries
    kept = minimal_generators(ring, ambient.generator_degrees, cycles, relations, logger=logger)
    quotient = Presentation(ambient.cover, [vector_to_column(v, ring, rank) for v in relations])
    module, _ = submodule_presentation(quotient, [cycles[k] for k in kept], logger=logger)
    return ExtResult(i, module)


def module_rank(module):
    """Rank of M: the alternating sum of the ranks of a free resolution"""
    ranks = free_resolution(module, minimal=True).ranks()
    return sum(r if i % 2 == 0 else -r for i, r in enumerate(ranks))


class VectorBundleCheck:
    """Verdict of the vector bundle test, truthy iff the sheaf is locally free"""

    def __init__(self, verdict, failing_index=None, exts=()):
        self.verdict = verdict
        self.failing_index = failing_index
        self.exts = list(exts)

    def __bool__(self):
        return self.verdict

    def __repr__(self):
        return "VectorBundleCheck(verdict=%s, failing_index=%s)" % (self.verdict, self.failing_index)


def is_vector_bundle(sheaf, logger=None):
    """Whether Ext^i(M, A) is torsion for i = 1..n+1, so that every sheaf Ext^i(M, O) vanishes

    :param quotient.SheafRep|gmodule.Presentation sheaf:
    :rtype: VectorBundleCheck
    """
    module = getattr(sheaf, "module", sheaf)
    ring = module.ring
    structure = Presentation.free(ring, [0])
    resolution = free_resolution(module, minimal=True, logger=logger)
    exts = []
    for i in range(1, ring.nvars + 1):
        ext = graded_ext(module, structure, i, resolution=resolution, logger=logger)
        exts.append(ext)
        if not ext.is_torsion:
            return VectorBundleCheck(False, i, exts)
    return VectorBundleCheck(True, None, exts)


class EulerSequence:
    """0 -> O -> sum of O(a_j) -> T -> 0 with T the saturated cokernel of the Euler map"""

    def __init__(self, ring, euler_map, projection, tangent):
        """
        :param ring.WeightedRing ring:
        :param gmodule.GradedMap euler_map:
            O -> sum of O(a_j), 1 -> (x_0, ..., x_n)
        :param gmodule.GradedMap projection:
            sum of O(a_j) -> T
        :param quotient.SheafRep tangent:
        """
        self.ring = ring
        self.euler_map = euler_map
        self.projection = projection
        self.tangent = tangent

    def checks(self, window=None, logger=None):
        """The three exactness assertions: the Euler map is a sheaf mono, the projection a sheaf epi and the
        kernel of the projection equals the image of the Euler map on every degree of the window

        :param quotient.DegreeWindow window:
            the window of the tangent sheaf if None
        :rtype: dict[str, bool]
        """
        window = window or self.tangent.window
        middle = self.projection.source
        gb = self.tangent.module.gb()
        composite_zero = all(gb.contains(self.projection.apply(v)) for v in self.euler_map.image_vectors())
        kernel_module, _ = kernel(self.projection, logger=logger)
        image_module, _ = submodule_presentation(middle, [v for v in self.euler_map.image_vectors() if v],
                                                 logger=logger)
        exact = composite_zero and all(hilbert_function(kernel_module, d) == hilbert_function(image_module, d)
                                       for d in window.degrees())
        return {
            "euler_mono": bool(is_mono_sheaf(self.euler_map, logger=logger)),
            "projection_epi": bool(is_epi_sheaf(self.projection)),
            "exact": exact,
        }


def euler_tangent(ring, window=None, options=None):
    """The tangent sheaf of P(a_0, ..., a_n) as the saturated cokernel of the Euler map

    :param ring.WeightedRing ring:
    :param quotient.DegreeWindow window:
    :param options.KernelOptions options:
    :rtype: EulerSequence
    """
    options = options or KernelOptions()
    structure = Presentation.free(ring, [0])
    middle = direct_sum_of([Presentation.free(ring, [-w]) for w in ring.weights], ring)
    images = [{(ring.variable_monomial(j), j): ring.field.one for j in range(ring.nvars)}]
    euler_map = GradedMap.from_vectors(structure, middle, images)
    raw = cokernel_projection(euler_map)
    tangent = saturate(raw.target, window, options)
    return EulerSequence(ring, euler_map, compose(tangent.unit, raw), tangent)


class ProbeRecord:
    """Outcome of the ampleness probe against one test sheaf F"""

    def __init__(self, sheaf_id, n_max, verdicts, failure_degrees):
        """
        :param str sheaf_id:
        :param int n_max:
        :param dict[int, bool] verdicts:
            n -> whether F (x) Sym^n(M) is weighted globally generated
        :param dict[int, int] failure_degrees:
            n -> failure degree, for the failing n
        """
        self.sheaf_id = sheaf_id
        self.n_max = n_max
        self.verdicts = dict(verdicts)
        self.failure_degrees = dict(failure_degrees)
        self.n0 = None
        for n in range(n_max, 0, -1):
            if not self.verdicts[n]:
                break
            self.n0 = n

    @property
    def verified_range(self):
        return None if self.n0 is None else (self.n0, self.n_max)

    def last_failure(self):
        failing = [n for n, verdict in self.verdicts.items() if not verdict]
        return max(failing) if failing else None


def ample_probe(bundle, sheaf, n_max, sheaf_id="F", options=None, progress=None):
    """Scans n = 1..n_max and finds the least n0 such that F (x) Sym^n(M) is weighted globally generated for
    every n in [n0, n_max]. This is evidence of ampleness, never a proof of the tail n > n_max.

    :param quotient.SheafRep bundle:
        M
    :param quotient.SheafRep sheaf:
        F
    :param int n_max:
        positive bound
    :param str sheaf_id:
        identifier of F in the report
    :param options.KernelOptions options:
    :param progress:
        optional callable(n, verdict) invoked after every n
    :rtype: ProbeRecord
    """
    if n_max < 1:
        raise MalformedInputError("n_max should be positive, got %d" % n_max)
    options = options or KernelOptions()
    logger = options.logger
    verdicts, failures = {}, {}
    for n in range(1, n_max + 1):
        log = Log("probe", "probe %s with n=%d" % (sheaf_id, n), depth=2)
        logger.start_log_timer([log])
        product = tensor_presentation(sheaf.module, sym_presentation(bundle.module, n))
        certificate = wgg_check_presentation(product, options)
        logger.stop_log_timer([log])
        verdicts[n] = certificate.verdict
        if not certificate.verdict:
            failures[n] = certificate.failure_degree
        if progress is not None:
            progress(n, certificate.verdict)
    record = ProbeRecord(sheaf_id, n_max, verdicts, failures)
    logger.log([Log("probe-result", "probe %s: n0 = %s" % (sheaf_id, record.n0), depth=1)])
    return record


class AmpleReport:
    """Ampleness evidence for a bundle against a list of test sheaves"""

    def __init__(self, bundle_id, records, vector_bundle=True):
        self.bundle_id = bundle_id
        self.records = list(records)
        self.vector_bundle = bool(vector_bundle)

    @property
    def success(self):
        return self.vector_bundle and all(record.n0 is not None for record in self.records)

    def n0_values(self):
        return {record.sheaf_id: record.n0 for record in self.records}


def twist_sheaves(ring, twists, options=None):
    """Test sheaves O(k) keyed "O(k)", "O" for k = 0"""
    return [("O" if k == 0 else "O(%d)" % k, structure_twist(ring, k, options=options)) for k in twists]


def verify_tangent_ample(ring, sheaves, n_max, options=None, raise_on_failure=True):
    """Probes the tangent sheaf T of P(a_0, ..., a_n) against every test sheaf

    :param ring.WeightedRing ring:
    :param list[(str, quotient.SheafRep)] sheaves:
        identified test sheaves F
    :param int n_max:
    :param options.KernelOptions options:
    :param bool raise_on_failure:
        raise AmpleProbeFailure for the first test sheaf without n0
    :rtype: AmpleReport
    """
    options = options or KernelOptions()
    sequence = euler_tangent(ring, options=options)
    vector_bundle = is_vector_bundle(sequence.tangent, logger=options.logger)
    records = []
    for sheaf_id, sheaf in sheaves:
        record = ample_probe(sequence.tangent, sheaf, n_max, sheaf_id=sheaf_id, options=options)
        if record.n0 is None and raise_on_failure:
            raise AmpleProbeFailure(sheaf_id, record.last_failure())
        records.append(record)
    return AmpleReport("T", records, vector_bundle=bool(vector_bundle))
