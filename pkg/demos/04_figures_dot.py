"""
Drawing the lattices
====================

DOT files for the weak order with its Tonks fibers colored, the Tamari
order and the quotient. Render them with ``dot -Tpdf``.
"""

from pathlib import Path

from operadlab.dot import quotient_dot, tamari_dot, weak_order_dot

out = Path("figures")
out.mkdir(exist_ok=True)

# collapsed covers are red; each fiber has its own fill color
(out / "weak_3.dot").write_text(weak_order_dot(3, color_fibers=True))
(out / "weak_4.dot").write_text(weak_order_dot(4, color_fibers=True))
(out / "tamari_4.dot").write_text(tamari_dot(4))
(out / "quotient_4.dot").write_text(quotient_dot(4))

for path in sorted(out.glob("*.dot")):
    print(path, path.read_text().count("->"), "edges")
