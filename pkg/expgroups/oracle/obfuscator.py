import logging
import random

from expgroups.configs.configs import ObfuscationConfigs
from expgroups.element.element import Element
from expgroups.element.raw import (
    RawExpr,
    RawGenerator,
    RawInverse,
    RawPower,
    RawProduct,
    to_raw,
)
from expgroups.models.enums import ObfuscationStep
from expgroups.rings.ring_element import RingElement
from expgroups.rings.ring_protocol import RingContract

NodePath = tuple[int, ...]
"""Child indices leading from the root of a tree to one of its nodes."""

POWER_STEPS: frozenset[ObfuscationStep] = frozenset(
    {
        ObfuscationStep.SPLIT_EXPONENT,
        ObfuscationStep.CONJUGATION_REWRITE,
        ObfuscationStep.SHIFT_COMMUTATION,
        ObfuscationStep.INVERSE_POWER,
    }
)


class Obfuscator:
    """
    Rewrites an element into a larger expression tree with the same value, one axiom application per step.

    Catalog version 1:
        - `SPLIT_EXPONENT`: `x^a -> x^b * x^(a-b)`.
        - `INSERT_INVERSE_PAIR`: `x -> x * w * w^-1` for a random word or power `w`.
        - `CONJUGATION_REWRITE`: `x^a -> w * (w^-1 * x * w)^a * w^-1`.
        - `SHIFT_COMMUTATION`: `x^a -> x^n * x^a * x^-n` for an integer `n`.
        - `DOUBLE_INVERSION`: `x -> (x^-1)^-1`.
        - `INVERSE_POWER`: `x^a -> (x^-1)^(-a)`.

    Steps that need a power node fall back to `INSERT_INVERSE_PAIR` when the tree has none. The catalog and the
    order of random draws are fixed, so a seed always produces the same tree.

    Attributes:
        - `ring` (RingContract): The exponent ring.
        - `alphabet_size` (int): Generators available for inserted words.
        - `configs` (ObfuscationConfigs): Step weights and exponent bounds.

    Example:
        ```Python
        obfuscator = Obfuscator(PolynomialRing(), alphabet_size=2)
        tree = obfuscator.obfuscate(element, seed=5, steps=20)
        assert rewriter.normalize(tree) == element
        ```
    """

    def __init__(
        self,
        ring: RingContract,
        alphabet_size: int,
        configs: ObfuscationConfigs | None = None,
    ) -> None:
        self.ring: RingContract = ring
        self.alphabet_size: int = alphabet_size
        self.configs: ObfuscationConfigs = configs or ObfuscationConfigs()

    def obfuscate(self, element: Element, seed: int, steps: int) -> RawExpr:
        if steps < 0:
            raise ValueError(f"Step count must be non-negative, got {steps}")

        rng: random.Random = random.Random(seed)
        tree: RawExpr = to_raw(element)
        catalog: list[ObfuscationStep] = list(ObfuscationStep)
        weights: list[int] = [self.configs.weights.get(step, 0) for step in catalog]
        for _ in range(steps):
            step: ObfuscationStep = rng.choices(catalog, weights=weights)[0]
            tree = self._apply(tree, step, rng)
        logging.debug(f"Obfuscated with {steps} steps from seed {seed}")
        return tree

    def _apply(self, tree: RawExpr, step: ObfuscationStep, rng: random.Random) -> RawExpr:
        paths: list[NodePath] = list(_node_paths(tree))
        if step in POWER_STEPS:
            power_paths: list[NodePath] = [
                path for path in paths if isinstance(_node_at(tree, path), RawPower)
            ]
            if not power_paths:
                step = ObfuscationStep.INSERT_INVERSE_PAIR
            else:
                paths = power_paths

        path: NodePath = rng.choice(paths)
        node: RawExpr = _node_at(tree, path)
        return _replace_at(tree, path, self._rewrite(node, step, rng))

    def _rewrite(self, node: RawExpr, step: ObfuscationStep, rng: random.Random) -> RawExpr:
        if step == ObfuscationStep.INSERT_INVERSE_PAIR:
            inserted: RawExpr = self._random_piece(rng)
            return RawProduct((node, inserted, RawInverse(inserted)))
        if step == ObfuscationStep.DOUBLE_INVERSION:
            return RawInverse(RawInverse(node))

        assert isinstance(node, RawPower)
        base, exponent = node.child, node.exponent
        if step == ObfuscationStep.SPLIT_EXPONENT:
            part: RingElement = self._random_exponent(rng)
            return RawProduct((RawPower(base, part), RawPower(base, exponent - part)))
        if step == ObfuscationStep.CONJUGATION_REWRITE:
            conjugator: RawExpr = self._random_piece(rng)
            inverse: RawExpr = RawInverse(conjugator)
            return RawProduct(
                (
                    conjugator,
                    RawPower(RawProduct((inverse, base, conjugator)), exponent),
                    inverse,
                )
            )
        if step == ObfuscationStep.SHIFT_COMMUTATION:
            shift: RingElement = self.ring.from_int(rng.choice((-2, -1, 1, 2)))
            return RawProduct(
                (RawPower(base, shift), node, RawPower(base, -shift))
            )
        if step == ObfuscationStep.INVERSE_POWER:
            return RawPower(RawInverse(base), -exponent)
        raise ValueError(f"Unknown obfuscation step {step}")

    def _random_piece(self, rng: random.Random) -> RawExpr:
        letters: list[RawExpr] = [
            RawGenerator(rng.randrange(self.alphabet_size), rng.choice((1, -1)))
            for _ in range(rng.randint(1, 2))
        ]
        piece: RawExpr = letters[0] if len(letters) == 1 else RawProduct(tuple(letters))
        if rng.random() < 0.3:
            return RawPower(piece, self._random_exponent(rng))
        return piece

    def _random_exponent(self, rng: random.Random) -> RingElement:
        bound: int = self.configs.max_coefficient
        degree: int = 0 if self.ring.indeterminate is None else self.configs.max_degree
        result: RingElement = self.ring.zero()
        for power in range(degree + 1):
            result = result + self.ring.monomial(power, rng.randint(-bound, bound))
        return result


def _node_paths(tree: RawExpr, prefix: NodePath = ()) -> list[NodePath]:
    paths: list[NodePath] = [prefix]
    if isinstance(tree, RawProduct):
        for position, child in enumerate(tree.children):
            paths.extend(_node_paths(child, prefix + (position,)))
    elif isinstance(tree, (RawInverse, RawPower)):
        paths.extend(_node_paths(tree.child, prefix + (0,)))
    return paths


def _node_at(tree: RawExpr, path: NodePath) -> RawExpr:
    node: RawExpr = tree
    for position in path:
        if isinstance(node, RawProduct):
            node = node.children[position]
        else:
            assert isinstance(node, (RawInverse, RawPower))
            node = node.child
    return node


def _replace_at(tree: RawExpr, path: NodePath, replacement: RawExpr) -> RawExpr:
    if not path:
        return replacement
    head, rest = path[0], path[1:]
    if isinstance(tree, RawProduct):
        children: list[RawExpr] = list(tree.children)
        children[head] = _replace_at(children[head], rest, replacement)
        return RawProduct(tuple(children))
    if isinstance(tree, RawInverse):
        return RawInverse(_replace_at(tree.child, rest, replacement))
    assert isinstance(tree, RawPower)
    return RawPower(_replace_at(tree.child, rest, replacement), tree.exponent)
