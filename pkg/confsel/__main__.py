# -*- coding:utf8 -*-
from confsel.cli import cli

if __name__ == "__main__":
    cli()
