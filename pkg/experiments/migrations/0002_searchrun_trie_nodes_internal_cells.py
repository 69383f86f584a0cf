# Generated by Django 4.2.7 on 2026-10-16 14:21

from django.db import migrations, models


class Migration(migrations.Migration):

    dependencies = [
        ('experiments', '0001_initial'),
    ]

    operations = [
        migrations.AddField(
            model_name='searchrun',
            name='trie_nodes',
            field=models.PositiveIntegerField(default=0, help_text='Non-root dictionary trie nodes (256 seeds included for ZLW)'),
        ),
        migrations.AddField(
            model_name='searchrun',
            name='internal_cells',
            field=models.PositiveIntegerField(default=0, help_text='Cells of the internal match sets (approximate runs)'),
        ),
    ]
