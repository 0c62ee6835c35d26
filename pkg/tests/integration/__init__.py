"""End-to-end acceptance checks across lpvkit-core."""
