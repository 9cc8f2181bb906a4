"""
Quick start guide script.

Walks through straightening and braid synthesis programmatically on a
reduced factorization of the Coxeter element s1 s2 s3 s4 s5 in S6.
"""

from bruhat import path_of_factorization, to_dot
from bruhat.bruhat_graph import directed_ball
from core import enumerate_reflections, reflection_length, standard_system
from hurwitz import (
    BraidWord,
    Factorization,
    apply_braid,
    extract_insertion_permutation,
    hurwitz_orbit,
    straighten,
    transitivity_braid,
)
from utils import setup_logger


def main():
    """Demonstrate basic usage."""

    # Set up logging
    setup_logger("", level=20)

    print("coxhurwitz - Quick Start Demo")
    print("=" * 50)

    print("\n1. Building the Coxeter system A5...")
    system = standard_system("A5")
    c_word = (1, 2, 3, 4, 5)
    c = system.element_from_word(c_word)
    print(f"   Rank {system.rank}, |W| = {system.group_order()}")
    print(f"   c = {c.label()}: length {c.length()}, reflection length {reflection_length(c)}")
    print(f"   {len(enumerate_reflections(system))} reflections")

    print("\n2. A reduced reflection factorization of c...")
    f = Factorization(
        [system.element_from_word(w) for w in [(2,), (5,), (5, 3, 5), (5, 3, 2, 1, 2, 3, 5), (5, 4, 5)]],
        system
    )
    print(f"   f = {f}")
    path = path_of_factorization(system.identity, f.reflections)
    print("   Path from e: " + " -> ".join(v.label() for v in path.vertices))
    print("   Lengths: " + " ".join(str(n) for n in path.lengths))

    print("\n3. Straightening (already directed, so nothing moves)...")
    result = straighten(f)
    print(f"   Witness: {result.witness.to_string()}, pivot {result.pivot}")

    print("\n4. Insertion permutation and braid...")
    pi = extract_insertion_permutation(result.factorization, c_word)
    print(f"   pi = {pi}")
    braid = transitivity_braid(f, c_word)
    print(f"   Braid (application order): {braid.to_string()}")
    print(f"   Result: {apply_braid(f, braid)}")

    textbook = BraidWord.from_written([(1, 1), (2, 1), (4, 1), (3, 1), (2, 1)])
    print(f"   sigma1 sigma2 sigma4 sigma3 sigma2 gives {apply_braid(f, textbook)}")

    print("\n5. Hurwitz orbit of the simple factorization...")
    simple = Factorization([system.generator(i) for i in c_word], system)
    print(f"   {len(hurwitz_orbit(simple))} reduced factorizations of c (6^4 = 1296)")

    print("\n6. Bruhat graph of A2 as DOT...")
    print(to_dot(directed_ball(standard_system("A2"), 3), name="A2"))

    print("=" * 50)
    print("Demo complete!")
    print("\nFor the command-line interface, run:")
    print("    python main.py --help")


if __name__ == "__main__":
    main()
