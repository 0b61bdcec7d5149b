"""
Supposer — Propositional Logic Package
Syntax (logic.syntax), the pyparsing grammar (logic.parser) and
world semantics (logic.semantics). Import the submodules directly:
logic.semantics depends on state.schemas, which itself imports logic.syntax.
"""
