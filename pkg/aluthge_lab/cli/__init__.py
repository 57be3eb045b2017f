"""aluthge-lab command line interface."""
import click

from .analyze import analyze, transform, certify
from .repro import repro, suite


@click.group(help='Commands to analyze the Aluthge, Duggal and mean transforms of '
             'matrices and weighted shifts and to test their complex symmetry.')
@click.version_option()
def lab():
    pass


lab.add_command(analyze)
lab.add_command(transform)
lab.add_command(certify)
lab.add_command(repro)
lab.add_command(suite)
